#include <doctest.h>

#include "gen.hpp"
#include "jelonek/verifier.hpp"

using namespace jelonek;

static const std::vector<std::string> XY{"x", "y"};
static const std::vector<std::string> UV{"u", "v"};

static NormalForm nf_of(const std::string& p, const std::string& q) {
    return normalize_monic(make_map(parse_polynomial(p, XY), parse_polynomial(q, XY)));
}

static XiPoly xp(std::initializer_list<long> cs) {
    std::vector<Scalar> v;
    for (long c : cs) v.emplace_back(Rational(c));
    return XiPoly(std::move(v));
}

TEST_CASE("jacobian constancy") {
    auto j1 = jacobian_constancy({parse_polynomial("x + y^2", XY), parse_polynomial("y", XY)});
    REQUIRE(j1.has_value());
    CHECK(*j1 == 1);
    CHECK(!jacobian_constancy({parse_polynomial("x + y", XY), parse_polynomial("x*y + y^2", XY)})
               .has_value());
    auto j3 = jacobian_constancy({parse_polynomial("x", XY), parse_polynomial("y", XY)});
    REQUIRE(j3.has_value());
    CHECK(*j3 == 1);
}

TEST_CASE("theorem 1 shape checks") {
    SUBCASE("empty component list is vacuous") {
        NormalForm nf = nf_of("x + y^2", "y");
        Theorem1Result r = verify_theorem1(nf, {}, 1e-30);
        CHECK(r.applicable);
        CHECK(r.vacuous);
        CHECK(r.all_ok());
    }
    SUBCASE("synthetic passing parametrization") {
        // (2 xi^3 + xi, 4 xi^6 + 1) with A=1, B=1, d=1, e=2: C = 2, m = 3.
        NormalForm nf;
        nf.A = 1;
        nf.B = 1;
        nf.d = 1;
        nf.e = 2;
        nf.K = 1;
        ComponentParam comp;
        comp.p = xp({0, 1, 0, 2});
        comp.q = xp({1, 0, 0, 0, 0, 0, 4});
        Theorem1Result r = verify_theorem1(nf, {comp}, 1e-30);
        REQUIRE(r.components.size() == 1);
        CHECK(r.components[0].shape_ok);
        CHECK(r.components[0].m == 3);
        REQUIRE(r.components[0].C_phi.has_value());
        CHECK(r.components[0].C_phi->rational() == 2);
    }
    SUBCASE("degree mismatch fails") {
        NormalForm nf;
        nf.A = 1;
        nf.B = 1;
        nf.d = 1;
        nf.e = 1;
        ComponentParam comp;
        comp.p = xp({0, 0, 1});   // xi^2
        comp.q = xp({0, 0, 0, 1});  // xi^3
        Theorem1Result r = verify_theorem1(nf, {comp}, 1e-30);
        REQUIRE(r.components.size() == 1);
        CHECK(!r.components[0].shape_ok);
    }
}

TEST_CASE("corollary 2 checks") {
    SUBCASE("synthetic component (xi, xi^2) with d=1, e=2") {
        NormalForm nf;
        nf.A = 1;
        nf.B = 1;
        nf.d = 1;
        nf.e = 2;
        ComponentParam comp;
        comp.p = xp({0, 1});
        comp.q = xp({0, 0, 1});
        Cor2Result r = verify_cor2(nf, {comp});
        REQUIRE(r.components.size() == 1);
        CHECK(r.one_point_at_infinity);
        REQUIRE(r.components[0].relation_head.has_value());
        CHECK(*r.components[0].relation_head);
        REQUIRE(r.components[0].relation_radical.has_value());
        CHECK(*r.components[0].relation_radical);
    }
    SUBCASE("two distinct directions") {
        NormalForm nf;
        nf.A = 1;
        nf.B = 1;
        nf.d = 1;
        nf.e = 1;
        ComponentParam c1, c2;
        c1.p = xp({0, 1});
        c1.q = xp({0, 1});
        c2.p = xp({0, 1});
        c2.q = xp({0, -1});
        Cor2Result r = verify_cor2(nf, {c1, c2});
        CHECK(!r.one_point_at_infinity);
    }
    SUBCASE("axis-parallel component flagged special") {
        NormalForm nf = nf_of("x", "x*y");
        ComponentParam comp;
        comp.p = XiPoly();
        comp.q = xp({0, -1});
        Cor2Result r = verify_cor2(nf, {comp});
        REQUIRE(r.components.size() == 1);
        CHECK(r.components[0].special);
        CHECK(r.components[0].direction == "[0:1:0]");
    }
}

TEST_CASE("cross validation") {
    std::mt19937_64 rng(2024);
    SUBCASE("R0 = -u against component (0, -xi)") {
        Poly R0 = parse_polynomial("-u", UV);
        ComponentParam comp;
        comp.p = XiPoly();
        comp.q = xp({0, -1});
        CrossValidation cv = cross_validate(R0, {comp}, 1e-30, 256, rng);
        REQUIRE(cv.components.size() == 1);
        CHECK(cv.components[0].ok);
        CHECK(cv.components[0].exact_zero);
        CHECK(cv.converse_checked > 0);
        CHECK(cv.converse_ok);
    }
    SUBCASE("constant R0 with no components is vacuous") {
        Poly R0 = parse_polynomial("1", UV);
        CrossValidation cv = cross_validate(R0, {}, 1e-30, 256, rng);
        CHECK(cv.all_ok());
        CHECK(cv.converse_checked == 0);
    }
    SUBCASE("R0 = u^2 - v against (xi, xi^2)") {
        Poly R0 = parse_polynomial("u^2 - v", UV);
        ComponentParam comp;
        comp.p = xp({0, 1});
        comp.q = xp({0, 0, 1});
        CrossValidation cv = cross_validate(R0, {comp}, 1e-30, 256, rng);
        CHECK(cv.all_ok());
    }
    SUBCASE("spurious component is caught") {
        Poly R0 = parse_polynomial("u^2 - v", UV);
        ComponentParam comp;
        comp.p = xp({0, 1});
        comp.q = xp({0, 1});  // the diagonal, not on R0 = 0
        CrossValidation cv = cross_validate(R0, {comp}, 1e-30, 256, rng);
        CHECK(!cv.components[0].ok);
    }
}

TEST_CASE("fiber count worked examples") {
    SUBCASE("(x + y^2, y) at (5, 1) has one preimage") {
        NormalForm nf = nf_of("x + y^2", "y");
        auto c = fiber_count_at(nf, Rational(5), Rational(1), 1, 256);
        REQUIRE(c.has_value());
        CHECK(*c == 1);
    }
    SUBCASE("(x, x*y) generic fiber is a single point") {
        NormalForm nf = nf_of("x", "x*y");
        std::mt19937_64 rng(7);
        CHECK(fiber_count_generic(nf, 1, 256, rng) == 1);
    }
    SUBCASE("geometric degree oracle agrees with deg_x Res") {
        std::mt19937_64 rng(99);
        NormalForm nf = nf_of("x*y + y^2", "x + y^3");
        ResultantData rd = resultant_in_y(nf);
        CHECK(fiber_count_generic(nf, rd.N, 256, rng) == rd.N);
    }
}
