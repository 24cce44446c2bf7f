#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semialg/bounds.hpp"

using namespace semialg;

TEST_CASE("loja_bound: exact values and monotonicity") {
    CHECK(loja_bound(2, 1) == Int("18446744073709551616"));   // 16^16
    CHECK(loja_bound(2, 2) == pow_int(Int(16), 18));
    CHECK(loja_bound(3, 1) > loja_bound(2, 1));
    CHECK_THROWS_AS(loja_bound(1, 1), std::invalid_argument);
}

TEST_CASE("belim_degree_bound: hand product and paper majorization instances") {
    CHECK(belim_degree_bound(2, 1) == 313600);   // 8*4*14*7*100
    CHECK(belim_degree_bound(2, 1) < pow_int(Int(16), 6));
    CHECK(belim_degree_bound(3, 2) < pow_int(Int(24), 8));
    CHECK_THROWS_AS(belim_degree_bound(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(belim_degree_bound(2, 0), std::invalid_argument);
}

TEST_CASE("prop264_bound: exact values and the composition relation") {
    CHECK(prop264_bound(2, 1) == Int("281474976710656"));   // 16^12
    CHECK(prop264_bound(2, 2) == pow_int(Int(16), 14));
    CHECK(prop264_bound(2, 3) == loja_bound(2, 1));
}

TEST_CASE("majorization sweep over the full grid") {
    for (unsigned d = 2; d <= 16; ++d) {
        for (unsigned k = 1; k <= 8; ++k) {
            CHECK(belim_degree_bound(d, k) < belim_majorant(d, k));
        }
    }
}

TEST_CASE("bound composition identity over the full grid") {
    for (unsigned d = 2; d <= 16; ++d) {
        for (unsigned n = 1; n <= 8; ++n) {
            CHECK(loja_bound(d, n) == prop264_bound(d, n + 2));
        }
    }
}

TEST_CASE("example floor: the bound never dips below d^n") {
    for (unsigned d = 2; d <= 8; ++d) {
        for (unsigned n = 1; n <= 6; ++n) {
            CHECK(loja_bound(d, n) >= pow_int(Int(d), n));
        }
    }
}

TEST_CASE("integer bounds strictly increase in each argument") {
    for (unsigned d = 2; d <= 16; ++d) {
        for (unsigned n = 1; n <= 8; ++n) {
            if (d > 2) {
                CHECK(loja_bound(d, n) > loja_bound(d - 1, n));
                CHECK(belim_degree_bound(d, n) > belim_degree_bound(d - 1, n));
                CHECK(prop264_bound(d, n) > prop264_bound(d - 1, n));
            }
            if (n > 1) {
                CHECK(loja_bound(d, n) > loja_bound(d, n - 1));
                CHECK(belim_degree_bound(d, n) > belim_degree_bound(d, n - 1));
                CHECK(prop264_bound(d, n) > prop264_bound(d, n - 1));
            }
        }
    }
}

TEST_CASE("comparators: the hand-checked instances") {
    // Kurdyka-Spodzieja with dbar=2, n=1, s=1, rbar=1: 2 * 9^2 = 162
    BoundReport k = comparator_bounds(2, 1, std::nullopt, 1, 2, 1);
    CHECK(std::get<Int>(k.entries.at("kurdyka")) == 162);
    // isolated zero: (3^3 + 1)/2 = 14
    CHECK(std::get<Int>(k.entries.at("kurdyka_isolated_zero")) == 14);

    // LMP15 with d=2, n=1, r=1, s=0: min{3*6, 2*9} = 18; compact: (3^2+1)/2 = 5
    BoundReport l = comparator_bounds(2, 1, 1, 0, std::nullopt, std::nullopt);
    CHECK(std::get<Int>(l.entries.at("lmp15")) == 18);
    CHECK(std::get<Int>(l.entries.at("lmp15_compact")) == 5);

    // Kollar with d=2, n=3: B(2) * 2^3 = 16
    BoundReport ko = comparator_bounds(2, 3, std::nullopt, std::nullopt, std::nullopt, std::nullopt);
    CHECK(std::get<Int>(ko.entries.at("kollar")) == 16);

    // D'Acunto-Kurdyka with d=3, n=2: 1 - 1/max{15,6} = 14/15
    BoundReport dk = comparator_bounds(3, 2, std::nullopt, std::nullopt, std::nullopt, std::nullopt);
    CHECK(std::get<Rational>(dk.entries.at("gradient_dacunto_kurdyka")) == make_rational(14, 15));

    // gradient bounds live in (0,1)
    for (const auto& name : {"gradient_isolated_singularity", "gradient_dacunto_kurdyka",
                             "gradient_nash"}) {
        Rational v = std::get<Rational>(dk.entries.at(name));
        CHECK(v > 0);
        CHECK(v < 1);
    }

}

TEST_CASE("convex comparator value") {
    // d=2, n=3: min{(3^3+1)/2, C(2,1)*8} = min{14,16} = 14
    BoundReport r = comparator_bounds(2, 3, std::nullopt, std::nullopt, std::nullopt, std::nullopt);
    CHECK(std::get<Int>(r.entries.at("convex")) == 14);
}

TEST_CASE("comparators: out-of-domain parameters are omitted with reasons") {
    BoundReport r = comparator_bounds(1, 2, 1, 1, 1, 1);
    CHECK(r.omitted.count("kollar") == 1);
    CHECK(r.omitted.count("lmp15") == 1);
    CHECK(r.omitted.count("kurdyka") == 1);
    CHECK(r.entries.count("solerno") == 1);   // symbolic entry survives

    BoundReport r2 = comparator_bounds(2, 1, std::nullopt, std::nullopt, std::nullopt, std::nullopt);
    CHECK(r2.omitted.count("kurdyka") == 1);
    CHECK(r2.omitted.count("lmp15") == 1);
    CHECK(r2.entries.count("kollar") == 1);
}

TEST_CASE("asymptotic bounds stay symbolic") {
    BoundReport r = bound_report(2, 2, std::nullopt, std::nullopt, std::nullopt, std::nullopt);
    CHECK(std::holds_alternative<std::string>(r.entries.at("solerno")));
    CHECK(std::holds_alternative<std::string>(r.entries.at("error_bound_general_dim")));
    CHECK(std::holds_alternative<std::string>(r.entries.at("sdp_exponent")));
    CHECK(std::get<Int>(r.entries.at("loja_bound")) == loja_bound(2, 2));
}

TEST_CASE("sos_rate: examples") {
    CHECK(sos_rate(1, 1, 1, 1, 1, 1024) == doctest::Approx(0.0625).epsilon(1e-12));
    // doubling rho halves the decay exponent
    double r1 = sos_rate(1, 1, 1, 1, 1, 4096);
    double r2 = sos_rate(1, 1, 1, 1, 2, 4096);
    CHECK(r2 == doctest::Approx(std::sqrt(r1)).epsilon(1e-12));
    // monotone decreasing to zero in t
    CHECK(sos_rate(1, 1, 1, 2, 3, 100000) < sos_rate(1, 1, 1, 2, 3, 1000));
    CHECK(sos_rate(1, 1, 1, 1, 1, 1000000000) < 1e-3);
    CHECK_THROWS_AS(sos_rate(1, 1, 1, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("descent_rate: examples") {
    CHECK(descent_rate(1, 7) == 1.0);
    CHECK(descent_rate(1, 12345) == 1.0);
    CHECK(descent_rate(2, 100) == doctest::Approx(0.01));
    CHECK(descent_rate(3, 10) == doctest::Approx(0.01));
    CHECK_THROWS_AS(descent_rate(0, 1), std::invalid_argument);
}
