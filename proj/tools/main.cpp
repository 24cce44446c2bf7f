#include "semialg/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {

const char* kUsage =
    "usage: semialg <subcommand> [--flag value ...]\n"
    "\n"
    "subcommands:\n"
    "  parse               canonicalize a polynomial expression\n"
    "  roots               isolate the real roots of a univariate polynomial\n"
    "  thom                Thom encodings of the real roots\n"
    "  signcond1d          sign-invariant cell decomposition of the line\n"
    "  cad2d               cylindrical decomposition of the plane\n"
    "  growth-check        empirical polynomial-growth check along a curve\n"
    "  dist                distance to a finite point set or a 1-d set\n"
    "  residual            constraint-violation residuals (psi / binary / sdp)\n"
    "  bounds              exact exponent bounds and prior-work comparators\n"
    "  estimate-loja       empirical Lojasiewicz exponent along a curve\n"
    "  estimate-errorbound empirical error-bound exponent via the envelope\n"
    "  newton-slope        first Newton-polygon slope of a bivariate polynomial\n"
    "  sos-rate            sums-of-squares relaxation gap rate\n"
    "  run-spec            re-run an invocation dumped with --dump-spec\n"
    "\n"
    "common flags: --out FILE, --csv FILE, --seed N, --dump-spec\n";

}   // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::fputs(kUsage, args.empty() ? stderr : stdout);
        return args.empty() ? 1 : 0;
    }
    semialg::cli::RunResult res = semialg::cli::run(args);
    if (!res.out.empty()) std::fputs(res.out.c_str(), stdout);
    if (!res.err.empty()) std::fputs(res.err.c_str(), stderr);
    return res.exit_code;
}
