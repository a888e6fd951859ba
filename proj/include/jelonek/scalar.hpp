#pragma once

#include <string>
#include <variant>

#include "jelonek/ball.hpp"
#include "jelonek/rational.hpp"

namespace jelonek {

// Coefficient tower: exact rational by default, complex ball where algebraic
// numbers force approximation. Mixed arithmetic promotes the rational side to
// a ball at the other operand's precision; rational-rational stays exact.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(const Rational& r) : v_(r) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(Ball b) : v_(std::move(b)) {}

    bool is_exact() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const Ball& ball() const { return std::get<Ball>(v_); }

    // Ball view at the given precision (identity for ball values).
    Ball to_ball(long prec) const;

    // Zero test: exact equality for rationals; |mid| <= 4 rad for balls.
    bool is_zero() const;
    // Certainly nonzero (|mid| > 4 rad, or exact nonzero).
    bool is_nonzero() const { return !is_zero(); }

    // Magnitude upper bound as double (absolute value for rationals).
    double mag_upper() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar pow(long e) const;

    // a == b within the ball tolerance policy (exact equality when both exact).
    friend bool scalar_eq(const Scalar& a, const Scalar& b);
    // Deterministic total order for canonical sorting of roots/prefixes:
    // exact before ball, then by value (re, im).
    friend int scalar_order(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    std::variant<Rational, Ball> v_;
};

inline Scalar scalar_one() { return Scalar(Rational(1)); }

} // namespace jelonek
