#include "jelonek/ball.hpp"

#include <cmath>
#include <sstream>

#include "jelonek/errors.hpp"

namespace jelonek {

std::optional<Rational> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    // mpq_class(string) aborts on garbage, so validate first.
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] >= '0' && s[i] <= '9') { digits = true; continue; }
        if (s[i] == '/' && !slash && digits) { slash = true; digits = false; continue; }
        return std::nullopt;
    }
    if (!digits) return std::nullopt;
    Rational r(s);
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    Rational base = r;
    long n = e;
    if (n < 0) {
        base = 1 / base;
        n = -n;
    }
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

BigFloat BigFloat::from_rational(const Rational& r, long prec) {
    BigFloat f(prec);
    mpfr_set_q(f.v_, r.get_mpq_t(), MPFR_RNDN);
    return f;
}

BigFloat BigFloat::from_double(double d, long prec) {
    BigFloat f(prec);
    mpfr_set_d(f.v_, d, MPFR_RNDN);
    return f;
}

double BigFloat::to_double_upper_abs() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, v_, MPFR_RNDU);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return d;
}

static long op_prec(const BigFloat& a, const BigFloat& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(op_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(op_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(op_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(op_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
BigFloat abs(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
BigFloat sqrt_rn(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string core = neg ? mant.substr(1) : mant;
    std::ostringstream out;
    if (neg) out << '-';
    if (core.empty() || mpfr_zero_p(v_)) return "0";
    out << core[0];
    if (core.size() > 1) {
        // Trim trailing zeros of the mantissa for stable short output.
        size_t end = core.find_last_not_of('0');
        if (end > 0) out << '.' << core.substr(1, end);
    }
    out << 'e' << (e - 1);
    return out.str();
}

// Relative rounding slop per complex operation: a few ulps at the midpoint
// precision, over-approximated.
static double round_slop(long prec, double mag) {
    double eps = std::ldexp(1.0, int(-(prec > 1020 ? 1020 : prec) + 4));
    double tiny = std::ldexp(1.0, -1060);
    return eps * (mag + 1.0) + tiny;
}

Ball Ball::from_rational(const Rational& r, long prec) {
    Ball b(BigFloat::from_rational(r, prec), BigFloat(prec), 0.0);
    b.rad = round_slop(prec, b.mid_mag_upper());
    return b;
}

Ball Ball::from_parts(const Rational& re, const Rational& im, long prec) {
    Ball b(BigFloat::from_rational(re, prec), BigFloat::from_rational(im, prec), 0.0);
    b.rad = round_slop(prec, b.mid_mag_upper());
    return b;
}

double Ball::mid_mag_upper() const {
    return re.to_double_upper_abs() + im.to_double_upper_abs();
}

double Ball::mag_lower() const {
    // |mid| >= max(|re|,|im|) in magnitude; subtract radius.
    double lo = std::max(std::abs(re.to_double()), std::abs(im.to_double()));
    lo = lo * (1.0 - 1e-14) - rad;
    return lo > 0 ? lo : 0.0;
}

bool Ball::contains_zero() const {
    double lo = mag_lower();
    return lo <= 0.0;
}

std::string Ball::str() const {
    std::ostringstream out;
    out << "(" << re.str() << " " << im.str() << " r=" << rad << ")";
    return out.str();
}

static long bprec(const Ball& a, const Ball& b) {
    long p = a.prec() > b.prec() ? a.prec() : b.prec();
    return p < 64 ? 64 : p;
}

Ball operator+(const Ball& a, const Ball& b) {
    Ball r(a.re + b.re, a.im + b.im, 0.0);
    r.rad = a.rad + b.rad + round_slop(bprec(a, b), r.mid_mag_upper());
    return r;
}

Ball operator-(const Ball& a, const Ball& b) {
    Ball r(a.re - b.re, a.im - b.im, 0.0);
    r.rad = a.rad + b.rad + round_slop(bprec(a, b), r.mid_mag_upper());
    return r;
}

Ball operator-(const Ball& a) { return Ball(-a.re, -a.im, a.rad); }

Ball operator*(const Ball& a, const Ball& b) {
    Ball r(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, 0.0);
    double ma = a.mid_mag_upper(), mb = b.mid_mag_upper();
    r.rad = ma * b.rad + mb * a.rad + a.rad * b.rad +
            round_slop(bprec(a, b), r.mid_mag_upper() + ma * mb);
    return r;
}

Ball operator/(const Ball& a, const Ball& b) {
    double blo = b.mag_lower();
    if (blo <= 0.0)
        throw precision_error("ball division by an interval containing zero");
    long p = bprec(a, b);
    BigFloat den = b.re * b.re + b.im * b.im;
    Ball r((a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den, 0.0);
    double ma = a.mid_mag_upper();
    // |a/b - mid| <= (|a| rad_b + |b| rad_a)/(|b| (|b|-rad_b)) style bound.
    r.rad = (ma + a.rad) * b.rad / (blo * blo) + a.rad / blo +
            round_slop(p, r.mid_mag_upper());
    return r;
}

Ball ball_pow(const Ball& a, long e) {
    long prec = a.prec();
    Ball acc = Ball::from_rational(Rational(1), prec);
    if (e == 0) return acc;
    Ball base = a;
    long n = e;
    bool inv = n < 0;
    if (inv) n = -n;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    if (inv) acc = Ball::from_rational(Rational(1), prec) / acc;
    return acc;
}

double ball_dist_upper(const Ball& a, const Ball& b) {
    Ball d = a - b;
    return d.mag_upper();
}

} // namespace jelonek
