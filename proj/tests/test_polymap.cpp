#include <doctest.h>

#include "gen.hpp"
#include "jelonek/errors.hpp"
#include "jelonek/polymap.hpp"

using namespace jelonek;

static const std::vector<std::string> XY{"x", "y"};

static PolyMap map_of(const std::string& p, const std::string& q) {
    return make_map(parse_polynomial(p, XY), parse_polynomial(q, XY));
}

TEST_CASE("jacobian worked values") {
    CHECK(jacobian(map_of("x", "y")) == parse_polynomial("1", XY));
    CHECK(jacobian(map_of("x + y^2", "y")) == parse_polynomial("1", XY));
    CHECK(jacobian(map_of("x + y", "x*y + y^2")) == parse_polynomial("x + y", XY));
}

TEST_CASE("jacobian is a derivation in the second slot") {
    testgen::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Poly p = testgen::random_poly(rng, XY, 4, 5, 8);
        Poly q = testgen::random_poly(rng, XY, 4, 5, 8);
        Poly r = testgen::random_poly(rng, XY, 4, 5, 8);
        PolyMap pq{p, q}, pr{p, r}, pqr{p, q * r};
        CHECK(jacobian(pqr) == q * jacobian(pr) + r * jacobian(pq));
    }
}

TEST_CASE("jacobian chain rule over shears and triangular maps") {
    testgen::Rng rng(5);
    Poly x = Poly::variable("x", XY), y = Poly::variable("y", XY);
    for (int i = 0; i < 15; ++i) {
        PolyMap f = testgen::random_tame_automorphism(rng, 3, 6);
        PolyMap g = testgen::random_tame_automorphism(rng, 3, 6);
        PolyMap fg = compose_map(f, g);
        std::map<std::string, Poly> gsub{{"x", g.P}, {"y", g.Q}};
        CHECK(jacobian(fg) == jacobian(f).compose(gsub) * jacobian(g));
    }
}

TEST_CASE("normalize_monic worked examples") {
    SUBCASE("already monic") {
        NormalForm nf = normalize_monic(map_of("x + y^2", "y"));
        CHECK(nf.lambda == 0);
        CHECK(nf.A == 1);
        CHECK(nf.B == 1);
        CHECK(nf.K == 1);
        CHECK(nf.d == 2);
        CHECK(nf.e == 1);
    }
    SUBCASE("needs one shear") {
        NormalForm nf = normalize_monic(map_of("x", "x*y"));
        CHECK(nf.lambda == 1);
        CHECK(nf.map.P == parse_polynomial("x + y", XY));
        CHECK(nf.map.Q == parse_polynomial("x*y + y^2", XY));
        CHECK(nf.A == 1);
        CHECK(nf.B == 1);
        CHECK(nf.K == 1);
        CHECK(nf.d == 1);
        CHECK(nf.e == 2);
    }
    SUBCASE("gcd extraction at degrees 4 and 6") {
        NormalForm nf = normalize_monic(map_of("y^4 + x", "y^6 + x"));
        CHECK(nf.K == 2);
        CHECK(nf.d == 2);
        CHECK(nf.e == 3);
    }
}

TEST_CASE("normalize_monic rejects degenerate input") {
    CHECK_THROWS_AS(normalize_monic(map_of("x", "x")), input_error);
    CHECK_THROWS_AS(normalize_monic(map_of("3", "y")), input_error);
    CHECK_THROWS_AS(make_map(Poly(XY), parse_polynomial("y", XY)), input_error);
}

TEST_CASE("normalization preserves the Jacobian up to the shear") {
    testgen::Rng rng(9);
    for (int i = 0; i < 12; ++i) {
        Poly p = testgen::random_poly(rng, XY, 4, 5, 6);
        Poly q = testgen::random_poly(rng, XY, 4, 5, 6);
        PolyMap f{p, q};
        if (p.degree() < 1 || q.degree() < 1 || jacobian(f).is_zero()) continue;
        NormalForm nf = normalize_monic(f);
        PolyMap sh = shear_map(Rational(nf.lambda));
        std::map<std::string, Poly> sub{{"x", sh.P}, {"y", sh.Q}};
        CHECK(jacobian(nf.map) == jacobian(f).compose(sub));
    }
}

TEST_CASE("leading relation check") {
    SUBCASE("degree one component is not applicable") {
        NormalForm nf = normalize_monic(map_of("x", "x*y"));
        LeadingRelation lr = leading_relation_check(nf);
        CHECK(!lr.applicable);
    }
    SUBCASE("forced identity holds") {
        // P+ = y^4, Q+ = y^2 under (A,B,d,e) = (1,1,2,1).
        NormalForm nf = normalize_monic(map_of("y^4 + x", "y^2 + x"));
        CHECK(nf.d == 2);
        CHECK(nf.e == 1);
        LeadingRelation lr = leading_relation_check(nf);
        CHECK(lr.applicable);
        CHECK(lr.holds);
        CHECK(lr.ratio == 1);
    }
    SUBCASE("mismatched heads fail") {
        // P+ = y^4, Q+ = 2 y^2: A=1, B=2, d=2, e=1, so B^d Q+^d = 16 y^4 != A^e P+^e.
        NormalForm nf = normalize_monic(map_of("y^4 + x", "2*y^2 + x"));
        LeadingRelation lr = leading_relation_check(nf);
        CHECK(lr.applicable);
        CHECK(!lr.holds);
        CHECK(lr.ratio == 4);
    }
}
