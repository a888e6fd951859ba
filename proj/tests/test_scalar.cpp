#include <doctest.h>

#include "jelonek/errors.hpp"
#include "jelonek/scalar.hpp"

using namespace jelonek;

TEST_CASE("rational helpers") {
    CHECK(rat_from_string("3/4").value() == rat(3, 4));
    CHECK(rat_from_string("-6/4").value() == rat(-3, 2));
    CHECK(rat_from_string("12").value() == Rational(12));
    CHECK(!rat_from_string("1/0").has_value());
    CHECK(!rat_from_string("abc").has_value());
    CHECK(!rat_from_string("").has_value());
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(rat_pow(rat(5, 7), 0) == 1);
    CHECK(gcd_long(12, 18) == 6);
    CHECK(lcm_long(4, 6) == 12);
}

TEST_CASE("exact scalar arithmetic stays exact") {
    Scalar a(rat(1, 3)), b(rat(1, 6));
    Scalar c = a + b;
    REQUIRE(c.is_exact());
    CHECK(c.rational() == rat(1, 2));
    CHECK((a - a).is_zero());
    CHECK((a * b).rational() == rat(1, 18));
    CHECK((a / b).rational() == 2);
    CHECK(a.pow(3).rational() == rat(1, 27));
    CHECK(a.pow(-1).rational() == 3);
}

TEST_CASE("ball arithmetic tracks small radii") {
    long prec = 256;
    Ball two = Ball::from_rational(Rational(2), prec);
    Ball third = Ball::from_rational(rat(1, 3), prec);
    Ball s = two * third + third;
    CHECK(s.rad < 1e-60);
    CHECK(std::abs(s.re.to_double() - 1.0) < 1e-15);
    Ball q = s / third;          // back to 3
    CHECK(std::abs(q.re.to_double() - 3.0) < 1e-12);
    CHECK(q.rad < 1e-60);
    Ball p = ball_pow(third, 5);
    CHECK(std::abs(p.re.to_double() - 1.0 / 243.0) < 1e-15);
}

TEST_CASE("ball division by zero-like interval throws") {
    Ball z = Ball::from_rational(Rational(0), 128);
    Ball one = Ball::from_rational(Rational(1), 128);
    CHECK_THROWS_AS(one / z, precision_error);
}

TEST_CASE("mixed arithmetic promotes to ball") {
    Scalar a(rat(1, 2));
    Scalar b(Ball::from_rational(rat(1, 2), 256));
    Scalar c = a - b;
    CHECK(!c.is_exact());
    CHECK(c.is_zero());
    CHECK(scalar_eq(a, b));
}

TEST_CASE("scalar ordering is deterministic") {
    Scalar a(rat(-1)), b(rat(2));
    CHECK(scalar_order(a, b) < 0);
    Scalar c(Ball::from_rational(rat(1), 128));
    CHECK(scalar_order(a, c) < 0);  // exact sorts before ball
    CHECK(scalar_order(c, c) == 0);
}
