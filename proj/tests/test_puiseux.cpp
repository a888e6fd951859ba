#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "jelonek/errors.hpp"
#include "jelonek/puiseux.hpp"

using namespace jelonek;

static const std::vector<std::string> XY{"x", "y"};

static Poly P(const std::string& s) { return parse_polynomial(s, XY); }

TEST_CASE("roots at infinity: worked examples") {
    SUBCASE("y - x") {
        auto roots = roots_at_infinity(P("y - x"), {});
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].m == 1);
        CHECK(roots[0].exact);
        REQUIRE(roots[0].terms.size() == 1);
        CHECK(roots[0].terms[0].first == 0);  // x^{1-0/1}
        CHECK(roots[0].terms[0].second.rational() == 1);
    }
    SUBCASE("y^2 - x: two conjugate half-integer branches") {
        auto roots = roots_at_infinity(P("y^2 - x"), {});
        REQUIRE(roots.size() == 2);
        for (const auto& r : roots) {
            CHECK(r.m == 2);
            REQUIRE(r.terms.size() == 1);
            CHECK(r.terms[0].first == 1);  // exponent 1 - 1/2 = 1/2
        }
        CHECK(roots[0].terms[0].second.rational() == -1);
        CHECK(roots[1].terms[0].second.rational() == 1);
    }
    SUBCASE("y^2 + x y factors as y (y + x)") {
        auto roots = roots_at_infinity(P("y^2 + x*y"), {});
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].terms.empty());  // y = 0
        REQUIRE(roots[1].terms.size() == 1);
        CHECK(roots[1].terms[0].second.rational() == -1);  // y = -x
        for (const auto& r : roots) CHECK(r.exact);
    }
}

TEST_CASE("root count equals degree, with multiplicity") {
    testgen::Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        long n = 2 + long(rng() % 4);
        Poly F = Poly::variable("y", XY).pow(n);
        for (long j = 0; j < n; ++j) {
            Poly cj = testgen::random_poly(rng, {"x"}, n - j, 2, 6).with_vars(XY);
            F += cj * Poly::variable("y", XY).pow(j);
        }
        if (F.degree() != n || F.degree_in("y") != n) continue;
        PuiseuxOptions opts;
        opts.max_order = 12;
        auto roots = roots_at_infinity(F, opts);
        long total = 0;
        for (const auto& r : roots) total += r.multiplicity;
        CHECK(total == n);
    }
}

TEST_CASE("repeated factors carry multiplicity counters") {
    // (y^2 - x)^2: branches +-x^{1/2} each with multiplicity 2.
    auto roots = roots_at_infinity(P("(y^2 - x)^2"), {});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].multiplicity == 2);
}

TEST_CASE("non-terminating repeated branches stop at max_order with multiplicity") {
    // (y^2 - x - 1)^2 is a square; its two branches never separate.
    PuiseuxOptions opts;
    opts.max_order = 6;
    auto roots = roots_at_infinity(P("(y^2 - x - 1)^2"), opts);
    long total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    CHECK(total == 4);
    bool saw_mult2_inexact = false;
    for (const auto& r : roots)
        if (!r.exact && r.multiplicity == 2) saw_mult2_inexact = true;
    CHECK(saw_mult2_inexact);
}

TEST_CASE("defect decays as expansion deepens") {
    Poly F = P("y^3 - x*y + 1");
    Rational prev_best(1000);
    for (long D : {2L, 5L, 9L}) {
        PuiseuxOptions opts;
        opts.max_order = D;
        auto roots = roots_at_infinity(F, opts);
        Rational worst(-100000);
        for (const auto& r : roots) {
            auto defect = substitution_defect(F, r, 256);
            if (defect) worst = std::max(worst, *defect);
        }
        // Leading residual exponent strictly drops with depth.
        CHECK(worst < prev_best);
        prev_best = worst;
    }
}

TEST_CASE("conjugacy closure under c_k -> c_k zeta^k") {
    // y^2 - x: conjugates +-x^{1/2} both present (zeta = -1).
    auto roots = roots_at_infinity(P("y^2 - x"), {});
    REQUIRE(roots.size() == 2);
    Scalar c0 = roots[0].terms[0].second, c1 = roots[1].terms[0].second;
    CHECK(scalar_eq(c0, -c1));

    // y^3 - x: three conjugates with cube roots of unity; all coefficients
    // cube to 1.
    auto r3 = roots_at_infinity(P("y^3 - x"), {});
    REQUIRE(r3.size() == 3);
    for (const auto& r : r3) {
        Scalar c = r.terms[0].second;
        Scalar cube = c.pow(3);
        CHECK(scalar_eq(cube, Scalar(Rational(1))));
    }
}

TEST_CASE("exactness escalation: rational branch data stays exact") {
    auto roots = roots_at_infinity(P("(y - x)*(y - 2*x)*(y + x - 1)"), {});
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots)
        for (const auto& [k, c] : r.terms) CHECK(c.is_exact());
}

TEST_CASE("substitute_param worked examples") {
    SUBCASE("F = x + y along -x + xi x^0") {
        DicriticalPrefix phi;
        phi.fixed.push_back({0, 1, Scalar(Rational(-1))});
        phi.slot_n = 1;
        phi.slot_m = 1;
        ParamSeries ps = substitute_param(P("x + y"), phi);
        REQUIRE(ps.terms.size() == 1);
        CHECK(ps.leading_exp_num() == 0);
        CHECK(ps.leading_coeff().str() == "xi");
    }
    SUBCASE("F = x y + y^2 along -x + xi x^{-1}") {
        DicriticalPrefix phi;
        phi.fixed.push_back({0, 1, Scalar(Rational(-1))});
        phi.slot_n = 2;
        phi.slot_m = 1;
        ParamSeries ps = substitute_param(P("x*y + y^2"), phi);
        REQUIRE(ps.terms.size() == 2);
        CHECK(ps.leading_exp_num() == 0);
        CHECK(ps.leading_coeff().str() == "-xi");
        CHECK(ps.terms[1].first == -2);
        CHECK(ps.terms[1].second.str() == "xi^2");
        CHECK(ps.coeff_at_zero().str() == "-xi");
    }
    SUBCASE("F = y along xi x") {
        DicriticalPrefix phi;  // no fixed part, slot at exponent 1
        ParamSeries ps = substitute_param(P("y"), phi);
        REQUIRE(ps.terms.size() == 1);
        CHECK(ps.leading_exp_num() == 1);
        CHECK(ps.leading_coeff().str() == "xi");
    }
    SUBCASE("truncation exhaustion raises") {
        DicriticalPrefix phi;
        phi.fixed.push_back({0, 1, Scalar(Rational(-1))});
        phi.slot_n = 5;
        phi.slot_m = 1;
        // F = x + y along -x + xi x^{-4}: the only term sits at x^{-4}.
        CHECK_THROWS_AS(substitute_param(P("x + y"), phi, 2), resource_error);
    }
}

TEST_CASE("factorization check reconstructs the input") {
    SUBCASE("y^2 - x") {
        auto roots = roots_at_infinity(P("y^2 - x"), {});
        auto rep = factorization_check(P("y^2 - x"), roots, Rational(1), 1e-38, 256);
        CHECK(rep.ok);
        CHECK(rep.residual == 0.0);  // rational branch data reconstructs exactly
    }
    SUBCASE("y (y + x)") {
        auto roots = roots_at_infinity(P("y^2 + x*y"), {});
        auto rep = factorization_check(P("y^2 + x*y"), roots, Rational(1), 1e-38, 256);
        CHECK(rep.ok);
    }
    SUBCASE("wrong leading constant is caught") {
        auto roots = roots_at_infinity(P("y^2 - x"), {});
        auto rep = factorization_check(P("y^2 - x"), roots, Rational(2), 1e-38, 256);
        CHECK(!rep.ok);
        CHECK(!rep.first_mismatch.empty());
    }
    SUBCASE("random monic cubic with irrational branches") {
        testgen::Rng rng(47);
        for (int t = 0; t < 6; ++t) {
            Poly F = Poly::variable("y", XY).pow(3);
            for (long j = 0; j < 3; ++j)
                F += testgen::random_poly(rng, {"x"}, 3 - j, 2, 5).with_vars(XY) *
                     Poly::variable("y", XY).pow(j);
            if (F.degree() != 3 || F.degree_in("y") != 3) continue;
            PuiseuxOptions opts;
            opts.max_order = 14;
            auto roots = roots_at_infinity(F, opts);
            auto rep = factorization_check(F, roots, Rational(1), std::ldexp(1.0, -128), 256);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("puiseux serial form coefficients queryable by exponent") {
    auto roots = roots_at_infinity(P("y^2 - x"), {});
    const auto& r = roots[1];  // +x^{1/2}
    auto c = r.coeff_at(1, 2);  // exponent 1 - 1/2
    REQUIRE(c.has_value());
    CHECK(c->rational() == 1);
    auto z = r.coeff_at(3, 2);
    REQUIRE(z.has_value());
    CHECK(z->is_zero());
}
