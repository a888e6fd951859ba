#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "jelonek/rational.hpp"

namespace jelonek {

// RAII wrapper over mpfr_t. Binary operations round to nearest at the larger
// of the operand precisions.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(long prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rational(const Rational& r, long prec);
    static BigFloat from_double(double d, long prec);

    long prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Upper bound on the value as a double (rounds away from zero safely).
    double to_double_upper_abs() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);
    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend BigFloat abs(const BigFloat& a);
    friend BigFloat sqrt_rn(const BigFloat& a);

    // Deterministic decimal rendering (round-trip not required; used for
    // reports only).
    std::string str(int digits = 40) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

// Complex disk: midpoint (re, im) at some mpfr precision plus an error radius
// covering rounding slop and input uncertainty. Radius arithmetic is carried
// in double with saturation; a non-finite radius raises precision_error at
// the first decision point that needs it.
struct Ball {
    BigFloat re, im;
    double rad = 0.0;

    Ball() = default;
    Ball(BigFloat r, BigFloat i, double eps) : re(std::move(r)), im(std::move(i)), rad(eps) {}

    static Ball from_rational(const Rational& r, long prec);
    static Ball from_parts(const Rational& re, const Rational& im, long prec);

    long prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }

    // |midpoint| upper and lower bounds as doubles.
    double mid_mag_upper() const;
    double mag_upper() const { return mid_mag_upper() + rad; }
    double mag_lower() const;

    bool contains_zero() const;
    bool is_exact_zero() const { return re.is_zero() && im.is_zero() && rad == 0.0; }

    std::string str() const;
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);
Ball ball_pow(const Ball& a, long e);

// Midpoint distance upper bound |a.mid - b.mid| + radii.
double ball_dist_upper(const Ball& a, const Ball& b);

} // namespace jelonek
