#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semialg/bounds.hpp"
#include "semialg/cad.hpp"
#include "semialg/cli.hpp"
#include "semialg/distance.hpp"
#include "semialg/estimate.hpp"
#include "semialg/parse.hpp"
#include "semialg/realroot.hpp"
#include "semialg/resultant.hpp"
#include "semialg/residual.hpp"

namespace py = pybind11;
using namespace semialg;

namespace {

Rational rational_from_str(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

std::vector<Rational> point_from_strs(const std::vector<std::string>& xs) {
    std::vector<Rational> pt;
    pt.reserve(xs.size());
    for (const auto& s : xs) pt.push_back(rational_from_str(s));
    return pt;
}

std::string rat_str(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

py::int_ int_to_py(const Int& z) { return py::int_(py::str(z.get_str())); }

Polynomial parse(const std::string& text, const std::vector<std::string>& vars) {
    return parse_poly(text, vars);
}

}   // namespace

PYBIND11_MODULE(_semialg, m) {
    m.doc() = "exact semi-algebraic analysis: polynomials, real roots, cells, "
              "exponent bounds and empirical exponent estimators";

    m.def(
        "parse_poly",
        [](const std::string& text, const std::vector<std::string>& vars) {
            return parse(text, vars).to_string(vars);
        },
        py::arg("text"), py::arg("vars"), "Canonical form of a polynomial expression");

    m.def(
        "eval_poly",
        [](const std::string& text, const std::vector<std::string>& vars,
           const std::vector<std::string>& point) {
            return rat_str(parse(text, vars).eval(point_from_strs(point)));
        },
        py::arg("text"), py::arg("vars"), py::arg("point"),
        "Exact value of the polynomial at a rational point");

    m.def(
        "derivative",
        [](const std::string& text, const std::vector<std::string>& vars, unsigned var) {
            return parse(text, vars).derivative(var).to_string(vars);
        },
        py::arg("text"), py::arg("vars"), py::arg("var") = 0);

    m.def(
        "sturm_sequence",
        [](const std::string& text, const std::string& var) {
            std::vector<std::string> vars{var};
            auto chain = up::sturm_sequence(up::from_polynomial(parse(text, vars)));
            std::vector<std::string> out;
            for (const auto& p : chain) out.push_back(up::to_polynomial(p).to_string(vars));
            return out;
        },
        py::arg("text"), py::arg("var") = "x");

    m.def(
        "resultant",
        [](const std::string& f, const std::string& g, const std::vector<std::string>& vars) {
            Polynomial res = resultant_wrt_last(parse(f, vars), parse(g, vars));
            std::vector<std::string> base(vars.begin(), vars.end() - 1);
            return res.to_string(base);
        },
        py::arg("f"), py::arg("g"), py::arg("vars"),
        "Resultant with respect to the last variable");

    m.def(
        "isolate_roots",
        [](const std::string& text, const std::string& var) {
            std::vector<std::string> vars{var};
            Polynomial p = parse(text, vars);
            UPoly u = up::from_polynomial(p);
            py::list out;
            for (const auto& r : isolate_roots(p)) {
                r.refine_below(make_rational(1, 1u << 20));
                py::dict d;
                d["low"] = rat_str(r.low());
                d["high"] = rat_str(r.high());
                d["approx"] = r.approx(1e-12);
                d["multiplicity"] = root_multiplicity(u, r);
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("text"), py::arg("var") = "x");

    m.def(
        "thom_encodings",
        [](const std::string& text, const std::string& var) {
            std::vector<std::string> vars{var};
            py::list out;
            for (const auto& e : thom_encode_roots(parse(text, vars))) {
                py::dict d;
                d["signs"] = e.signs;
                d["approx"] = e.root.approx(1e-12);
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("text"), py::arg("var") = "x");

    m.def(
        "sign_conditions_1d",
        [](const std::vector<std::string>& family, const std::string& var) {
            std::vector<std::string> vars{var};
            std::vector<Polynomial> fam;
            for (const auto& t : family) fam.push_back(parse(t, vars));
            py::list out;
            for (const auto& c : realizable_sign_conditions_1d(fam)) {
                py::dict d;
                d["type"] = c.is_point ? "point" : "interval";
                d["signs"] = c.signs;
                if (c.is_point) {
                    d["approx"] = c.point->approx(1e-12);
                } else {
                    d["sample"] = rat_str(*c.sample);
                }
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("family"), py::arg("var") = "x");

    m.def(
        "cad2d_cells",
        [](const std::vector<std::string>& family, const std::vector<std::string>& vars) {
            std::vector<Polynomial> fam;
            for (const auto& t : family) fam.push_back(parse(t, vars));
            CylDecomp cad = cad2d(fam);
            py::dict d;
            d["cell_count"] = cad.cell_count();
            d["base_cells"] = cad.base.size();
            std::vector<size_t> sizes;
            for (const auto& s : cad.stacks) sizes.push_back(s.size());
            d["stack_sizes"] = sizes;
            py::list proj;
            std::vector<std::string> base_vars{vars[0]};
            for (const auto& p : cad.projection) proj.append(p.to_string(base_vars));
            d["projection"] = std::move(proj);
            return d;
        },
        py::arg("family"), py::arg("vars"));

    m.def(
        "residual_psi",
        [](const std::vector<std::string>& g, const std::vector<std::string>& h,
           const std::vector<std::string>& vars, const std::vector<std::string>& x) {
            std::vector<Polynomial> gp, hp;
            for (const auto& t : g) gp.push_back(parse(t, vars));
            for (const auto& t : h) hp.push_back(parse(t, vars));
            return rat_str(residual_psi(gp, hp, point_from_strs(x)));
        },
        py::arg("g"), py::arg("h"), py::arg("vars"), py::arg("x"));

    m.def(
        "residual_binary",
        [](const std::vector<std::string>& g, const std::vector<std::string>& h,
           const std::vector<std::string>& vars, const std::vector<std::string>& x) {
            std::vector<Polynomial> gp, hp;
            for (const auto& t : g) gp.push_back(parse(t, vars));
            for (const auto& t : h) hp.push_back(parse(t, vars));
            BinaryResidual r = residual_binary(gp, hp, point_from_strs(x));
            py::dict d;
            d["value"] = r.value;
            d["h_squared_sum"] = rat_str(r.h_squared_sum);
            d["g_squared_sum"] = rat_str(r.g_squared_sum);
            d["binary_sum"] = rat_str(r.binary_sum);
            return d;
        },
        py::arg("g"), py::arg("h"), py::arg("vars"), py::arg("x"));

    m.def(
        "residual_sdp",
        [](const std::vector<std::vector<std::string>>& matrix) {
            SymMatrix m2;
            for (const auto& row : matrix) {
                std::vector<Rational> r;
                for (const auto& c : row) r.push_back(rational_from_str(c));
                m2.push_back(std::move(r));
            }
            SdpResidual r = residual_sdp(m2);
            py::dict d;
            d["lam_min_part"] = r.lam_min_part;
            d["minor_part"] = rat_str(r.minor_part);
            return d;
        },
        py::arg("matrix"));

    m.def(
        "dist_to_finite",
        [](const std::vector<std::vector<std::string>>& points,
           const std::vector<std::string>& x) {
            std::vector<std::vector<Rational>> pts;
            for (const auto& p : points) pts.push_back(point_from_strs(p));
            FiniteDistance fd = dist_to_finite(PointSet(std::move(pts)), point_from_strs(x));
            py::dict d;
            d["squared"] = rat_str(fd.squared);
            d["value"] = fd.value;
            return d;
        },
        py::arg("points"), py::arg("x"));

    m.def("loja_bound", [](unsigned d, unsigned n) { return int_to_py(loja_bound(d, n)); },
          py::arg("d"), py::arg("n"), "(8d)^(2(n+7)), exact");
    m.def("belim_degree_bound",
          [](unsigned d, unsigned k) { return int_to_py(belim_degree_bound(d, k)); },
          py::arg("d"), py::arg("k"));
    m.def("prop264_bound", [](unsigned d, unsigned n) { return int_to_py(prop264_bound(d, n)); },
          py::arg("d"), py::arg("n"));

    m.def(
        "comparator_bounds",
        [](unsigned d, unsigned n, std::optional<unsigned> r, std::optional<unsigned> s,
           std::optional<unsigned> dbar, std::optional<unsigned> rbar) {
            BoundReport rep = comparator_bounds(d, n, r, s, dbar, rbar);
            py::dict entries;
            for (const auto& [name, value] : rep.entries) {
                if (std::holds_alternative<Int>(value)) {
                    entries[name.c_str()] = int_to_py(std::get<Int>(value));
                } else if (std::holds_alternative<Rational>(value)) {
                    entries[name.c_str()] = rat_str(std::get<Rational>(value));
                } else {
                    entries[name.c_str()] = std::get<std::string>(value);
                }
            }
            py::dict d2;
            d2["entries"] = std::move(entries);
            py::dict omitted;
            for (const auto& [name, why] : rep.omitted) omitted[name.c_str()] = why;
            d2["omitted"] = std::move(omitted);
            return d2;
        },
        py::arg("d"), py::arg("n"), py::arg("r") = std::nullopt, py::arg("s") = std::nullopt,
        py::arg("dbar") = std::nullopt, py::arg("rbar") = std::nullopt);

    m.def("sos_rate", &sos_rate, py::arg("c"), py::arg("f_norm"), py::arg("deg_f"), py::arg("n"),
          py::arg("rho"), py::arg("t"));
    m.def("descent_rate", &descent_rate, py::arg("rho"), py::arg("k"));

    m.def(
        "newton_min_exponent",
        [](const std::string& text, const std::vector<std::string>& vars) {
            Rational g = newton_min_exponent(parse(text, vars));
            return py::make_tuple(int_to_py(g.get_num()), int_to_py(g.get_den()));
        },
        py::arg("text"), py::arg("vars"),
        "First Newton-polygon slope as a (numerator, denominator) pair");

    m.def(
        "estimate_paper_example",
        [](unsigned d, unsigned n, double t_max, unsigned decades, unsigned samples_per_decade) {
            PaperExample ex = make_paper_example(d, n);
            ExponentEstimate est =
                estimate_loja_on_curve(ex.f, ex.g, ex.curve, t_max, decades, samples_per_decade);
            py::dict out;
            out["exponent"] = est.exponent;
            out["intercept"] = est.intercept;
            out["r_squared"] = est.r_squared;
            out["sample_count"] = est.sample_count;
            out["low_confidence"] = est.low_confidence;
            return out;
        },
        py::arg("d"), py::arg("n"), py::arg("t_max") = 0.1, py::arg("decades") = 4,
        py::arg("samples_per_decade") = 16);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            cli::RunResult r = cli::run(args);
            return py::make_tuple(r.exit_code, r.out, r.err);
        },
        py::arg("args"), "Run a CLI invocation in-process; returns (exit_code, stdout, stderr)");
}
