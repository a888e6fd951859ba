#include "jelonek/scalar.hpp"

#include <cmath>
#include <cstdlib>

namespace jelonek {

Ball Scalar::to_ball(long prec) const {
    if (is_exact()) return Ball::from_rational(rational(), prec);
    return ball();
}

bool Scalar::is_zero() const {
    if (is_exact()) return rational() == 0;
    const Ball& b = ball();
    if (b.is_exact_zero()) return true;
    return b.mid_mag_upper() <= 4.0 * b.rad;
}

double Scalar::mag_upper() const {
    if (is_exact()) return std::abs(rational().get_d());
    return ball().mag_upper();
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(Rational(-rational()));
    return Scalar(-ball());
}

template <typename ExactOp, typename BallOp>
static Scalar combine(const Scalar& a, const Scalar& b, ExactOp eop, BallOp bop) {
    if (a.is_exact() && b.is_exact()) return Scalar(eop(a.rational(), b.rational()));
    long prec = 64;
    if (!a.is_exact()) prec = std::max(prec, a.ball().prec());
    if (!b.is_exact()) prec = std::max(prec, b.ball().prec());
    return Scalar(bop(a.to_ball(prec), b.to_ball(prec)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                   [](const Ball& x, const Ball& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                   [](const Ball& x, const Ball& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
                   [](const Ball& x, const Ball& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x / y); },
                   [](const Ball& x, const Ball& y) { return x / y; });
}

Scalar Scalar::pow(long e) const {
    if (is_exact()) return Scalar(rat_pow(rational(), e));
    return Scalar(ball_pow(ball(), e));
}

bool scalar_eq(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
    return (a - b).is_zero();
}

int scalar_order(const Scalar& a, const Scalar& b) {
    if (a.is_exact() != b.is_exact()) return a.is_exact() ? -1 : 1;
    if (a.is_exact()) return cmp(a.rational(), b.rational());
    int c = cmp(a.ball().re, b.ball().re);
    if (c != 0) return c;
    return cmp(a.ball().im, b.ball().im);
}

std::string Scalar::str() const {
    if (is_exact()) return rat_to_string(rational());
    return ball().str();
}

} // namespace jelonek
