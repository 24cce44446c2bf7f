#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semialg/parse.hpp"
#include "semialg/realroot.hpp"

#include "support/oracles.hpp"

#include <map>
#include <random>
#include <set>

using namespace semialg;
namespace oracle = semialg::testing;

namespace {

const std::vector<std::string> X{"x"};

Polynomial P(const std::string& s) { return parse_poly(s, X); }

}   // namespace

TEST_CASE("isolate_roots: x^2 - 2 brackets both square roots") {
    auto roots = isolate_roots(P("x^2 - 2"));
    REQUIRE(roots.size() == 2);
    roots[0].refine_below(make_rational(1, 64));
    roots[1].refine_below(make_rational(1, 64));
    CHECK(roots[0].low() >= Rational(-2));
    CHECK(roots[0].high() <= Rational(-1));
    CHECK(roots[1].low() >= Rational(1));
    CHECK(roots[1].high() <= Rational(2));
    CHECK(roots[0].approx() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-9));
    CHECK(roots[1].approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("isolate_roots: no real roots / exact rational roots") {
    CHECK(isolate_roots(P("x^2 + 1")).empty());

    auto roots = isolate_roots(P("x^2 - x"));   // x (x - 1)
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].is_exact());
    CHECK(roots[0].low() == 0);
    CHECK(roots[1].is_exact());
    CHECK(roots[1].low() == 1);

    CHECK_THROWS_AS(isolate_roots(P("0")), std::invalid_argument);
}

TEST_CASE("count_roots_in: examples and endpoint errors") {
    CHECK(count_roots_in(P("x^2 - 2"), Rational(0), Rational(2)) == 1);
    CHECK(count_roots_in(P("x^2 - 2"), Rational(-2), Rational(2)) == 2);
    CHECK(count_roots_in(P("x^2 + 1"), Rational(-10), Rational(10)) == 0);
    CHECK_THROWS_AS(count_roots_in(P("x^2 - 1"), Rational(1), Rational(3)), std::invalid_argument);
    CHECK_THROWS_AS(count_roots_in(P("x"), Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("sign_at_root: examples") {
    auto roots = isolate_roots(P("x^2 - 2"));
    REQUIRE(roots.size() == 2);
    const auto& positive = roots[1];
    CHECK(sign_at_root(P("2*x"), positive) == 1);
    CHECK(sign_at_root(P("x^2 - 2"), positive) == 0);
    CHECK(sign_at_root(P("1"), positive) == 1);
    CHECK(sign_at_root(P("2*x"), roots[0]) == -1);
}

TEST_CASE("thom encodings: examples") {
    auto e1 = thom_encode_roots(P("x^2 - 2"));
    REQUIRE(e1.size() == 2);
    CHECK(e1[0].signs == std::vector<int>{0, -1, 1});
    CHECK(e1[1].signs == std::vector<int>{0, 1, 1});

    auto e2 = thom_encode_roots(P("x"));
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].signs == std::vector<int>{0, 1});

    auto e3 = thom_encode_roots(P("x^2 - 2*x + 1"));   // (x-1)^2
    REQUIRE(e3.size() == 1);
    CHECK(e3[0].signs == std::vector<int>{0, 0, 1});
    CHECK(e3[0].root.is_exact());
    CHECK(e3[0].root.low() == 1);
}

TEST_CASE("root multiplicity via derivative signs") {
    UPoly u = up::from_polynomial(P("x^3 - 3*x^2 + 3*x - 1"));   // (x-1)^3
    auto roots = isolate_roots(P("x^3 - 3*x^2 + 3*x - 1"));
    REQUIRE(roots.size() == 1);
    CHECK(root_multiplicity(u, roots[0]) == 3);
}

TEST_CASE("realizable_sign_conditions_1d: {x, x^2-1} gives the 7 ordered cells") {
    auto cells = realizable_sign_conditions_1d({P("x"), P("x^2 - 1")});
    REQUIRE(cells.size() == 7);
    std::vector<std::vector<int>> expected{
        {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}};
    for (size_t i = 0; i < 7; ++i) {
        CHECK(cells[i].signs == expected[i]);
        CHECK(cells[i].is_point == (i % 2 == 1));
    }
}

TEST_CASE("realizable_sign_conditions_1d: single polynomial and definite family") {
    auto cells = realizable_sign_conditions_1d({P("x")});
    REQUIRE(cells.size() == 3);
    CHECK(cells[0].signs == std::vector<int>{-1});
    CHECK(cells[1].signs == std::vector<int>{0});
    CHECK(cells[2].signs == std::vector<int>{1});

    auto one = realizable_sign_conditions_1d({P("x^2 + 1")});
    REQUIRE(one.size() == 1);
    CHECK(one[0].signs == std::vector<int>{1});

    auto all = realizable_sign_conditions_1d({});
    REQUIRE(all.size() == 1);
    CHECK(all[0].signs.empty());
}

TEST_CASE("Thom's lemma: each realized sign condition on Der(P) is one cell") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 50; ++iter) {
        UPoly u = oracle::random_upoly(rng, 6, 5);
        std::vector<Polynomial> ders;
        UPoly d = u;
        while (!up::is_zero(d)) {
            ders.push_back(up::to_polynomial(d));
            d = up::derivative(d);
        }
        auto cells = realizable_sign_conditions_1d(ders);
        std::map<std::vector<int>, int> seen;
        for (const auto& c : cells) seen[c.signs] += 1;
        for (const auto& [sigma, count] : seen) {
            CHECK(count == 1);   // empty, a point, or a single interval
        }
    }
}

TEST_CASE("thom encodings are pairwise distinct and reproducible") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 40; ++iter) {
        UPoly u = oracle::random_upoly(rng, 6, 5);
        Polynomial p = up::to_polynomial(u);
        auto encs = thom_encode_roots(p);
        std::set<std::vector<int>> sigs;
        for (const auto& e : encs) sigs.insert(e.signs);
        CHECK(sigs.size() == encs.size());
        // reproduce each vector through sign_at_root on the derivatives
        std::vector<Polynomial> ders;
        {
            UPoly d = u;
            while (!up::is_zero(d)) {
                ders.push_back(up::to_polynomial(d));
                d = up::derivative(d);
            }
        }
        for (const auto& e : encs) {
            for (size_t j = 0; j < e.signs.size() && j < ders.size(); ++j) {
                CHECK(sign_at_root(ders[j], e.root) == e.signs[j]);
            }
        }
    }
}

TEST_CASE("sign conditions agree with brute-force sampling") {
    std::mt19937 rng(2718);
    for (int family_iter = 0; family_iter < 30; ++family_iter) {
        unsigned members = 1 + rng() % 4;
        std::vector<Polynomial> family;
        std::vector<UPoly> upolys;
        for (unsigned i = 0; i < members; ++i) {
            UPoly u = oracle::random_upoly(rng, 5, 4);
            upolys.push_back(u);
            family.push_back(up::to_polynomial(u));
        }
        auto cells = realizable_sign_conditions_1d(family);

        // oracle: approximate all roots numerically, then sample 10 random
        // rationals per gap and compare sign vectors in order
        std::vector<double> all_roots;
        for (const auto& u : upolys) {
            for (double r : oracle::numeric_roots(up::squarefree_part(u))) all_roots.push_back(r);
        }
        std::sort(all_roots.begin(), all_roots.end());
        all_roots.erase(std::unique(all_roots.begin(), all_roots.end(),
                                    [](double a, double b) { return std::abs(a - b) < 1e-7; }),
                        all_roots.end());

        std::vector<std::vector<int>> interval_sigs;
        for (const auto& c : cells) {
            if (!c.is_point) interval_sigs.push_back(c.signs);
        }
        REQUIRE(interval_sigs.size() == all_roots.size() + 1);

        std::uniform_real_distribution<double> unit(0.05, 0.95);
        for (size_t gap = 0; gap <= all_roots.size(); ++gap) {
            double lo = gap == 0 ? (all_roots.empty() ? -10.0 : all_roots.front() - 2.0)
                                 : all_roots[gap - 1];
            double hi = gap == all_roots.size() ? (all_roots.empty() ? 10.0 : all_roots.back() + 2.0)
                                                : all_roots[gap];
            for (int s = 0; s < 10; ++s) {
                double xd = lo + unit(rng) * (hi - lo);
                Rational x = rational_from_double(xd);
                std::vector<int> sig;
                for (const auto& u : upolys) sig.push_back(sign_of_rational(up::eval(u, x)));
                if (std::find(sig.begin(), sig.end(), 0) != sig.end()) continue;
                CHECK(sig == interval_sigs[gap]);
            }
        }
    }
}

TEST_CASE("cross-context root comparison: shared and distinct roots") {
    // sqrt(2) shows up as a root of two different polynomials
    auto a = isolate_roots(P("x^2 - 2"));
    auto b = isolate_roots(P("x^4 - 4"));     // roots +-sqrt(2)
    auto c = isolate_roots(P("x^2 - 3"));
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    REQUIRE(c.size() == 2);
    CHECK(a[1].compare(b[1]) == 0);           // sqrt(2) == sqrt(2)
    CHECK(a[0].compare(b[0]) == 0);           // -sqrt(2) == -sqrt(2)
    CHECK(a[1].compare(c[1]) == -1);          // sqrt(2) < sqrt(3)
    CHECK(c[1].compare(a[1]) == 1);
    CHECK(a[1].compare(b[0]) == 1);

    // rational vs algebraic comparisons
    CHECK(a[1].compare(Rational(1)) == 1);    // root > 1
    CHECK(a[1].compare(Rational(2)) == -1);
    CHECK(a[1].compare(make_rational(3, 2)) == -1);   // sqrt(2) < 1.5
}

TEST_CASE("rational construction stays canonical") {
    Rational q = make_rational(2, 4);
    CHECK(q.get_num() == 1);
    CHECK(q.get_den() == 2);
    Rational neg = make_rational(3, -6);
    CHECK(neg.get_num() == -1);
    CHECK(neg.get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("refining an interval never changes sign answers") {
    auto roots = isolate_roots(P("x^3 - 2"));
    REQUIRE(roots.size() == 1);
    Polynomial probe = P("x^2 - 2");
    int before = sign_at_root(probe, roots[0]);
    roots[0].refine_below(make_rational(1, 1000000));
    CHECK(sign_at_root(probe, roots[0]) == before);
    CHECK(before == -1);   // cbrt(2) ~ 1.26, so probe is negative there
}
