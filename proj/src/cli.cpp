#include "semialg/cli.hpp"

#include "semialg/bounds.hpp"
#include "semialg/cad.hpp"
#include "semialg/distance.hpp"
#include "semialg/estimate.hpp"
#include "semialg/parse.hpp"
#include "semialg/realroot.hpp"
#include "semialg/residual.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace semialg::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Invocation {
    std::string command;
    std::map<std::string, std::string> flags;   // canonical, sorted

    bool has(const std::string& k) const { return flags.count(k) > 0; }
    std::string get(const std::string& k) const {
        auto it = flags.find(k);
        if (it == flags.end()) throw InputError("missing required flag --" + k);
        return it->second;
    }
    std::string get_or(const std::string& k, const std::string& dflt) const {
        auto it = flags.find(k);
        return it == flags.end() ? dflt : it->second;
    }
    unsigned get_unsigned(const std::string& k) const {
        try {
            return static_cast<unsigned>(std::stoul(get(k)));
        } catch (const InputError&) {
            throw;
        } catch (...) {
            throw InputError("flag --" + k + " expects a natural number");
        }
    }
    unsigned get_unsigned_or(const std::string& k, unsigned dflt) const {
        return has(k) ? get_unsigned(k) : dflt;
    }
    double get_double_or(const std::string& k, double dflt) const {
        if (!has(k)) return dflt;
        try {
            return std::stod(get(k));
        } catch (...) {
            throw InputError("flag --" + k + " expects a number");
        }
    }
};

const std::set<std::string> kBoolFlags = {"dump-spec", "table", "emit-theta", "example-paper"};

Invocation parse_args(const std::vector<std::string>& args) {
    if (args.empty()) throw InputError("missing subcommand");
    Invocation inv;
    inv.command = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0) throw InputError("unexpected argument '" + a + "'");
        std::string key = a.substr(2);
        if (kBoolFlags.count(key)) {
            inv.flags[key] = "1";
        } else {
            if (i + 1 >= args.size()) throw InputError("flag --" + key + " expects a value");
            inv.flags[key] = args[++i];
        }
    }
    return inv;
}

Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (...) {
        throw InputError("bad rational literal '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> parse_vars(const Invocation& inv, const std::string& dflt) {
    std::vector<std::string> vars;
    for (auto& v : split(inv.get_or("vars", dflt), ',')) {
        if (!v.empty()) vars.push_back(v);
    }
    if (vars.empty()) throw InputError("empty variable list");
    return vars;
}

std::vector<Rational> parse_point(const std::string& s) {
    std::vector<Rational> pt;
    for (auto& c : split(s, ',')) pt.push_back(parse_rational(c));
    return pt;
}

std::string maybe_file(const std::string& v) {
    if (!v.empty() && v[0] == '@') {
        std::ifstream in(v.substr(1));
        if (!in) throw InputError("cannot read file " + v.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return v;
}

std::string rat_str(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

ordered_json estimate_json(const ExponentEstimate& est, uint64_t seed) {
    ordered_json j;
    j["exponent"] = est.exponent;
    j["intercept"] = est.intercept;
    j["r_squared"] = est.r_squared;
    j["sample_count"] = est.sample_count;
    j["window"] = {est.window.first, est.window.second};
    j["seed"] = seed;
    j["low_confidence"] = est.low_confidence;
    return j;
}

ordered_json bound_entry_json(const std::variant<Int, Rational, std::string>& v) {
    if (std::holds_alternative<Int>(v)) return std::get<Int>(v).get_str();
    if (std::holds_alternative<Rational>(v)) return rat_str(std::get<Rational>(v));
    return std::get<std::string>(v);
}

// ---------- subcommand handlers ----------

ordered_json cmd_parse(const Invocation& inv) {
    auto vars = parse_vars(inv, "x");
    Polynomial p = parse_poly(inv.get("poly"), vars);
    ordered_json j;
    j["poly"] = p.to_string(vars);
    j["terms"] = p.term_count();
    auto d = p.total_degree();
    if (d) {
        j["degree"] = *d;
    } else {
        j["degree"] = "-inf";
    }
    return j;
}

ordered_json cmd_roots(const Invocation& inv) {
    auto vars = parse_vars(inv, "x");
    if (vars.size() != 1) throw InputError("roots: expects one variable");
    Polynomial p = parse_poly(inv.get("poly"), vars);
    UPoly u = up::from_polynomial(p);
    if (up::is_zero(u)) throw InputError("roots: zero polynomial");
    auto roots = isolate_roots(p);
    Rational width = parse_rational(inv.get_or("width", "1/1024"));
    ordered_json arr = ordered_json::array();
    for (const auto& r : roots) {
        r.refine_below(width);
        ordered_json e;
        e["low"] = rat_str(r.low());
        e["high"] = rat_str(r.high());
        e["approx"] = r.approx(1e-12);
        e["multiplicity"] = root_multiplicity(u, r);
        arr.push_back(std::move(e));
    }
    ordered_json j;
    j["count"] = roots.size();
    j["roots"] = std::move(arr);
    return j;
}

ordered_json cmd_thom(const Invocation& inv) {
    auto vars = parse_vars(inv, "x");
    if (vars.size() != 1) throw InputError("thom: expects one variable");
    Polynomial p = parse_poly(inv.get("poly"), vars);
    auto encs = thom_encode_roots(p);
    ordered_json arr = ordered_json::array();
    for (const auto& e : encs) {
        ordered_json one;
        one["signs"] = e.signs;
        one["approx"] = e.root.approx(1e-12);
        arr.push_back(std::move(one));
    }
    ordered_json j;
    j["count"] = encs.size();
    j["encodings"] = std::move(arr);
    return j;
}

std::vector<Polynomial> parse_family(const Invocation& inv, const std::vector<std::string>& vars) {
    std::vector<Polynomial> family;
    for (auto& text : split(maybe_file(inv.get("family")), ';')) {
        if (text.empty()) continue;
        family.push_back(parse_poly(text, vars));
    }
    if (family.empty()) throw InputError("empty family");
    return family;
}

ordered_json cell1_json(const Cell1& c) {
    ordered_json e;
    e["type"] = c.is_point ? "point" : "interval";
    if (c.is_point) {
        e["approx"] = c.point->approx(1e-12);
        if (c.point->is_exact()) e["value"] = rat_str(c.point->low());
    } else {
        e["sample"] = rat_str(*c.sample);
    }
    e["signs"] = c.signs;
    return e;
}

ordered_json cmd_signcond1d(const Invocation& inv) {
    auto vars = parse_vars(inv, "x");
    if (vars.size() != 1) throw InputError("signcond1d: expects one variable");
    auto family = parse_family(inv, vars);
    auto cells = realizable_sign_conditions_1d(family);
    ordered_json arr = ordered_json::array();
    for (const auto& c : cells) arr.push_back(cell1_json(c));
    ordered_json j;
    j["cells"] = std::move(arr);
    j["count"] = cells.size();
    return j;
}

ordered_json cmd_cad2d(const Invocation& inv) {
    auto vars = parse_vars(inv, "x1,x2");
    if (vars.size() != 2) throw InputError("cad2d: expects two variables");
    auto family = parse_family(inv, vars);
    CylDecomp cad = cad2d(family);
    ordered_json j;
    ordered_json proj = ordered_json::array();
    for (const auto& p : cad.projection) proj.push_back(p.to_string({vars[0]}));
    j["projection"] = std::move(proj);
    ordered_json basej = ordered_json::array();
    for (const auto& c : cad.base) basej.push_back(cell1_json(c));
    j["base_cells"] = std::move(basej);
    ordered_json stacks = ordered_json::array();
    for (const auto& stack : cad.stacks) {
        ordered_json sj = ordered_json::array();
        for (const auto& cell : stack) {
            ordered_json cj;
            cj["kind"] = cell.is_section ? "section" : "sector";
            cj["signs"] = cell.signs;
            cj["x"] = cell.x_approx;
            cj["y"] = cell.y_approx;
            sj.push_back(std::move(cj));
        }
        stacks.push_back(std::move(sj));
    }
    j["stacks"] = std::move(stacks);
    j["cell_count"] = cad.cell_count();
    return j;
}

Formula selector_from(const Invocation& inv, const std::vector<std::string>& vars) {
    if (inv.has("selector-eq")) {
        return Formula::atom(parse_poly(inv.get("selector-eq"), vars), Rel::Eq0);
    }
    if (inv.has("selector-json")) {
        return Formula::from_json(maybe_file(inv.get("selector-json")));
    }
    throw InputError("needs --selector-eq or --selector-json");
}

ordered_json cmd_growth_check(const Invocation& inv) {
    auto vars = parse_vars(inv, "x1,x2");
    if (vars.size() != 2) throw InputError("growth-check: expects two variables");
    auto family = parse_family(inv, vars);
    Formula selector = selector_from(inv, vars);
    unsigned p = inv.get_unsigned("p");
    auto win = split(inv.get("window"), ',');
    if (win.size() != 2) throw InputError("--window expects lo,hi");
    auto rep = growth_check(family, selector, p,
                            {parse_rational(win[0]), parse_rational(win[1])},
                            inv.get_unsigned_or("samples", 24));
    ordered_json j;
    j["fitted_exponent"] = rep.fitted_exponent;
    j["claimed_p"] = rep.claimed_p;
    j["window"] = {rep.window.first, rep.window.second};
    j["samples_used"] = rep.samples_used;
    j["pass"] = rep.pass;
    return j;
}

ordered_json cmd_dist(const Invocation& inv) {
    ordered_json j;
    if (inv.has("points")) {
        std::vector<std::vector<Rational>> pts;
        for (auto& p : split(inv.get("points"), ';')) pts.push_back(parse_point(p));
        PointSet m(std::move(pts));
        std::vector<Rational> x = parse_point(inv.get("x"));
        FiniteDistance d = dist_to_finite(m, x);
        j["mode"] = "finite";
        j["squared"] = rat_str(d.squared);
        j["value"] = d.value;
        if (inv.has("emit-theta")) {
            std::vector<std::string> names;
            for (size_t i = 0; i < m.arity(); ++i) names.push_back("x" + std::to_string(i + 1));
            names.push_back("t");
            j["theta"] = ordered_json::parse(dist_formula_finite(m).to_json(names));
        }
        return j;
    }
    if (inv.has("formula-json")) {
        Formula phi = Formula::from_json(maybe_file(inv.get("formula-json")));
        Rational x = parse_rational(inv.get("x"));
        Dist1Result r = dist_1d(phi, x);
        j["mode"] = "1d";
        if (std::holds_alternative<Rational>(r.value)) {
            j["exact"] = rat_str(std::get<Rational>(r.value));
        } else {
            const auto& alg = std::get<AlgebraicDistance>(r.value);
            j["algebraic"] = true;
            j["offset"] = rat_str(alg.offset);
        }
        j["value"] = r.approx(1e-12);
        j["witness_cell"] = r.witness_cell;
        return j;
    }
    throw InputError("dist: needs --points or --formula-json");
}

ordered_json cmd_residual(const Invocation& inv) {
    std::string mode = inv.get_or("mode", "psi");
    ordered_json j;
    j["mode"] = mode;
    if (mode == "sdp") {
        SymMatrix m;
        for (auto& row : split(inv.get("matrix"), ';')) {
            std::vector<Rational> r;
            for (auto& c : split(row, ',')) r.push_back(parse_rational(c));
            m.push_back(std::move(r));
        }
        SdpResidual r = residual_sdp(m);
        j["lam_min_part"] = r.lam_min_part;
        j["minor_part"] = rat_str(r.minor_part);
        return j;
    }
    auto vars = parse_vars(inv, "x");
    std::vector<Polynomial> g, h;
    if (inv.has("g")) {
        for (auto& t : split(inv.get("g"), ';')) {
            if (!t.empty()) g.push_back(parse_poly(t, vars));
        }
    }
    if (inv.has("h")) {
        for (auto& t : split(inv.get("h"), ';')) {
            if (!t.empty()) h.push_back(parse_poly(t, vars));
        }
    }
    std::vector<Rational> x = parse_point(inv.get("x"));
    if (mode == "psi") {
        j["value"] = rat_str(residual_psi(g, h, x));
    } else if (mode == "binary") {
        BinaryResidual r = residual_binary(g, h, x);
        j["h_squared_sum"] = rat_str(r.h_squared_sum);
        j["g_squared_sum"] = rat_str(r.g_squared_sum);
        j["binary_sum"] = rat_str(r.binary_sum);
        j["value"] = r.value;
    } else {
        throw InputError("residual: unknown mode '" + mode + "'");
    }
    return j;
}

ordered_json cmd_bounds(const Invocation& inv, std::string& table_out) {
    unsigned d = inv.get_unsigned("d");
    unsigned n = inv.get_unsigned("n");
    std::optional<unsigned> r, s, dbar, rbar;
    if (inv.has("r")) r = inv.get_unsigned("r");
    if (inv.has("s")) s = inv.get_unsigned("s");
    if (inv.has("dbar")) dbar = inv.get_unsigned("dbar");
    if (inv.has("rbar")) rbar = inv.get_unsigned("rbar");
    BoundReport rep = bound_report(d, n, r, s, dbar, rbar);

    ordered_json j;
    ordered_json inputs;
    inputs["d"] = d;
    inputs["n"] = n;
    if (r) inputs["r"] = *r;
    if (s) inputs["s"] = *s;
    if (dbar) inputs["dbar"] = *dbar;
    if (rbar) inputs["rbar"] = *rbar;
    j["inputs"] = std::move(inputs);
    ordered_json entries;
    for (const auto& [name, value] : rep.entries) entries[name] = bound_entry_json(value);
    j["entries"] = std::move(entries);
    ordered_json omitted;
    for (const auto& [name, why] : rep.omitted) omitted[name] = why;
    j["omitted"] = std::move(omitted);

    if (inv.has("table")) {
        std::ostringstream t;
        size_t w = 0;
        for (const auto& [name, value] : rep.entries) w = std::max(w, name.size());
        for (const auto& [name, value] : rep.entries) {
            t << name << std::string(w - name.size() + 2, ' ')
              << bound_entry_json(value).get<std::string>() << "\n";
        }
        table_out = t.str();
    }
    return j;
}

ordered_json cmd_estimate_loja(const Invocation& inv, std::string& csv_out) {
    uint64_t seed = inv.get_unsigned_or("seed", 0);
    double t_max = inv.get_double_or("t-max", 0.1);
    unsigned decades = inv.get_unsigned_or("decades", 4);
    unsigned spd = inv.get_unsigned_or("samples-per-decade", 16);
    if (inv.has("example-paper")) {
        unsigned d = inv.get_unsigned("d");
        unsigned n = inv.get_unsigned("n");
        if (n > 3) throw InputError("--example-paper supports n <= 3");
        PaperExample ex = make_paper_example(d, n);
        ExponentEstimate est = ex.estimate(t_max, decades, spd);
        std::ostringstream csv;
        csv << "t,log_f,log_g\n";
        size_t total = static_cast<size_t>(decades) * spd;
        for (size_t i = 0; i < total; ++i) {
            double frac =
                total == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(total - 1);
            double td = t_max * std::pow(10.0, -static_cast<double>(decades) * frac);
            Rational t = rational_from_double(td);
            Rational fv = ex.f_on_curve(t);
            Rational g2 = ex.g_squared_on_curve(t);
            if (fv == 0 || g2 == 0) continue;
            csv << td << "," << log_rational_abs(fv) << "," << 0.5 * log_rational_abs(g2)
                << "\n";
        }
        csv_out = csv.str();
        ordered_json j = estimate_json(est, seed);
        j["d"] = d;
        j["n"] = n;
        return j;
    }
    Evaluator f, g;
    CurveSpec curve;
    if (inv.has("fp") && inv.has("gp")) {
        unsigned a = inv.get_unsigned("fp"), b = inv.get_unsigned("gp");
        f = [a](const std::vector<double>& x) { return std::pow(std::abs(x[0]), a); };
        g = [b](const std::vector<double>& x) { return std::pow(std::abs(x[0]), b); };
        curve.components.push_back(up::identity());
    } else {
        throw InputError("estimate-loja: needs --example-paper or --fp/--gp");
    }
    ExponentEstimate est = estimate_loja_on_curve(f, g, curve, t_max, decades, spd);

    // CSV: t, log_f, log_g
    std::ostringstream csv;
    csv << "t,log_f,log_g\n";
    size_t total = static_cast<size_t>(decades) * spd;
    for (size_t i = 0; i < total; ++i) {
        double frac = total == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(total - 1);
        double t = t_max * std::pow(10.0, -static_cast<double>(decades) * frac);
        auto x = curve.at(t);
        double fv = std::abs(f(x)), gv = std::abs(g(x));
        if (fv > 0 && gv > 0) csv << t << "," << std::log(fv) << "," << std::log(gv) << "\n";
    }
    csv_out = csv.str();
    return estimate_json(est, seed);
}

ordered_json cmd_estimate_errorbound(const Invocation& inv, std::string& csv_out) {
    uint64_t seed = inv.get_unsigned_or("seed", 0);
    unsigned d = inv.get_unsigned("d");
    size_t count = inv.get_unsigned_or("samples", 20000);
    size_t bins = inv.get_unsigned_or("bins", 40);

    // M = {0} in R with psi = |x|^d on [-1,1]
    Formula everything = Formula::verum(1);
    SampleSet samples = sample_region(everything, {{-1.0, 1.0}}, count, seed);
    Evaluator psi = [d](const std::vector<double>& x) {
        return std::pow(std::abs(x[0]), static_cast<double>(d));
    };
    Evaluator dist = [](const std::vector<double>& x) { return std::abs(x[0]); };
    annotate_values(samples, psi, dist);
    EnvelopeTable table = envelope(samples, bins);
    ExponentEstimate est = estimate_error_exponent(table);

    std::ostringstream csv;
    csv << "eps,phi,count\n";
    for (const auto& row : table.rows) {
        csv << row.eps << "," << row.phi << "," << row.support_count << "\n";
    }
    csv_out = csv.str();
    ordered_json j = estimate_json(est, seed);
    j["d"] = d;
    j["rows"] = table.rows.size();
    return j;
}

ordered_json cmd_newton_slope(const Invocation& inv) {
    auto vars = parse_vars(inv, "e,y");
    if (vars.size() != 2) throw InputError("newton-slope: expects two variables (eps, y)");
    Polynomial p = parse_poly(inv.get("poly"), vars);
    Rational gamma = newton_min_exponent(p);
    ordered_json j;
    j["gamma1"] = rat_str(gamma);
    j["rho_from_gamma"] = rat_str(Rational(1) / gamma);
    j["degree"] = *p.total_degree();
    return j;
}

ordered_json cmd_sos_rate(const Invocation& inv) {
    double c = inv.get_double_or("c", 1.0);
    double fn = inv.get_double_or("f-norm", 1.0);
    unsigned degf = inv.get_unsigned_or("deg-f", 1);
    unsigned n = inv.get_unsigned("n");
    unsigned rho = inv.get_unsigned("rho");
    unsigned long t = inv.get_unsigned("t");
    ordered_json j;
    j["rate"] = sos_rate(c, fn, degf, n, rho, t);
    j["decay_exponent"] = -1.0 / (2.5 * n * rho);
    return j;
}

}   // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult res;
    try {
        // SEMIALG_THREADS is the reserved parallelism knob; every current code
        // path is deterministic and single-threaded, so it only gets validated
        if (const char* threads = std::getenv("SEMIALG_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(threads, &end, 10);
            if (end == threads || *end != '\0' || v < 1) {
                throw InputError("SEMIALG_THREADS must be a positive integer");
            }
        }
        Invocation inv = parse_args(args);

        if (inv.command == "run-spec") {
            ordered_json spec = ordered_json::parse(maybe_file(inv.get("spec")));
            Invocation loaded;
            loaded.command = spec.at("subcommand").get<std::string>();
            for (auto& [k, v] : spec.at("flags").items()) loaded.flags[k] = v.get<std::string>();
            // out-of-band flags stay with the outer call
            if (inv.has("out")) loaded.flags["out"] = inv.get("out");
            inv = std::move(loaded);
        }

        if (inv.has("dump-spec")) {
            ordered_json spec;
            spec["subcommand"] = inv.command;
            ordered_json flags;
            for (const auto& [k, v] : inv.flags) {
                if (k != "dump-spec" && k != "out") flags[k] = v;
            }
            spec["flags"] = std::move(flags);
            res.out = spec.dump(2) + "\n";
            return res;
        }

        std::string table_out, csv_out;
        ordered_json payload;
        if (inv.command == "parse") {
            payload = cmd_parse(inv);
        } else if (inv.command == "roots") {
            payload = cmd_roots(inv);
        } else if (inv.command == "thom") {
            payload = cmd_thom(inv);
        } else if (inv.command == "signcond1d") {
            payload = cmd_signcond1d(inv);
        } else if (inv.command == "cad2d") {
            payload = cmd_cad2d(inv);
        } else if (inv.command == "growth-check") {
            payload = cmd_growth_check(inv);
        } else if (inv.command == "dist") {
            payload = cmd_dist(inv);
        } else if (inv.command == "residual") {
            payload = cmd_residual(inv);
        } else if (inv.command == "bounds") {
            payload = cmd_bounds(inv, table_out);
        } else if (inv.command == "estimate-loja") {
            payload = cmd_estimate_loja(inv, csv_out);
        } else if (inv.command == "estimate-errorbound") {
            payload = cmd_estimate_errorbound(inv, csv_out);
        } else if (inv.command == "newton-slope") {
            payload = cmd_newton_slope(inv);
        } else if (inv.command == "sos-rate") {
            payload = cmd_sos_rate(inv);
        } else {
            throw InputError("unknown subcommand '" + inv.command + "'");
        }

        ordered_json report;
        report["version"] = kVersion;
        report["command"] = inv.command;
        for (auto& [k, v] : payload.items()) report[k] = std::move(v);

        if (!csv_out.empty() && inv.has("csv")) {
            std::ofstream f(inv.get("csv"));
            if (!f) throw InputError("cannot write csv file " + inv.get("csv"));
            f << csv_out;
        }
        std::string text = report.dump(2) + "\n";
        if (inv.has("out")) {
            std::ofstream f(inv.get("out"));
            if (!f) throw InputError("cannot write output file " + inv.get("out"));
            f << text;
            res.out = table_out;
        } else {
            res.out = text;
            res.err = table_out;
        }
        return res;
    } catch (const InputError& e) {
        res.exit_code = 1;
        res.err = std::string("input error: ") + e.what() + "\n";
    } catch (const ParseError& e) {
        res.exit_code = 1;
        res.err = std::string("input error: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        res.exit_code = 1;
        res.err = std::string("input error: ") + e.what() + "\n";
    } catch (const std::runtime_error& e) {
        res.exit_code = 2;
        res.err = std::string("numeric failure: ") + e.what() + "\n";
    }
    return res;
}

}   // namespace semialg::cli
