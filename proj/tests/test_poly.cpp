#include <doctest.h>

#include "gen.hpp"
#include "jelonek/errors.hpp"
#include "jelonek/poly.hpp"

using namespace jelonek;

static const std::vector<std::string> XY{"x", "y"};

TEST_CASE("parse canonical forms") {
    Poly p = parse_polynomial("y^2 + x", XY);
    REQUIRE(p.term_count() == 2);
    CHECK(p.degree() == 2);
    CHECK(p.degree_in("y") == 2);
    CHECK(p.coeff_of("y", 2).constant_value() == 1);
    CHECK(p.coeff_of("y", 0) == parse_polynomial("x", XY));

    CHECK(parse_polynomial("0", XY).is_zero());
    CHECK(parse_polynomial("x*y - y*x", XY).is_zero());
    CHECK(parse_polynomial("(x + y)^2", XY) == parse_polynomial("x^2 + 2*x*y + y^2", XY));
    CHECK(parse_polynomial("1/2*x - x", XY) == parse_polynomial("-1/2*x", XY));
    CHECK(parse_polynomial("-3", XY).constant_value() == -3);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_polynomial("x + ", XY), input_error);
    CHECK_THROWS_AS(parse_polynomial("z + 1", XY), input_error);
    CHECK_THROWS_AS(parse_polynomial("x ^ y", XY), input_error);
    CHECK_THROWS_AS(parse_polynomial("(x", XY), input_error);
    CHECK_THROWS_AS(parse_polynomial("x 1", XY), input_error);
}

TEST_CASE("print-parse round trip is a fixed point") {
    testgen::Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        Poly p = testgen::random_poly(rng, XY, 6, 8, 20);
        Poly q = parse_polynomial(p.str(), XY);
        CHECK(q == p);
        CHECK(q.str() == p.str());
    }
}

TEST_CASE("ring laws on randomized triples") {
    testgen::Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        Poly a = testgen::random_poly(rng, XY, 5, 6, 12);
        Poly b = testgen::random_poly(rng, XY, 5, 6, 12);
        Poly c = testgen::random_poly(rng, XY, 5, 6, 12);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division") {
    testgen::Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        Poly a = testgen::random_poly(rng, XY, 4, 5, 9);
        Poly b = testgen::random_poly(rng, XY, 4, 5, 9);
        if (a.is_zero() || b.is_zero()) continue;
        Poly prod = a * b;
        CHECK(prod.divide_exact(b) == a);
        CHECK(prod.divide_exact(a) == b);
    }
    Poly x = Poly::variable("x", XY);
    Poly y = Poly::variable("y", XY);
    CHECK_THROWS_AS((x * x + y).divide_exact(x + y), std::domain_error);
}

TEST_CASE("derivative, leading form, compose") {
    Poly p = parse_polynomial("x^3*y + 2*x*y - 7", XY);
    CHECK(p.derivative("x") == parse_polynomial("3*x^2*y + 2*y", XY));
    CHECK(p.derivative("y") == parse_polynomial("x^3 + 2*x", XY));
    CHECK(p.leading_form() == parse_polynomial("x^3*y", XY));

    std::map<std::string, Poly> sub{{"x", parse_polynomial("x + y", XY)}};
    CHECK(parse_polynomial("x^2", XY).compose(sub) == parse_polynomial("(x+y)^2", XY));
}

TEST_CASE("evaluation") {
    Poly p = parse_polynomial("x^2*y - 3*y + 1/2", XY);
    CHECK(p.eval_all({{"x", Rational(2)}, {"y", rat(1, 2)}}) == rat(1, 2) * 4 - rat(3, 2) + rat(1, 2));
    Poly q = p.eval_var("y", Rational(1));
    CHECK(q == parse_polynomial("x^2 - 3 + 1/2", XY));
}

TEST_CASE("with_vars embeds into larger variable lists") {
    Poly p = parse_polynomial("x^2 + y", XY);
    Poly q = p.with_vars({"x", "y", "u"});
    CHECK(q.degree() == 2);
    CHECK(q.degree_in("u") == 0);
    Poly back = q.with_vars(XY);
    CHECK(back == p);
}
