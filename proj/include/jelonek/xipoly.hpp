#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jelonek/scalar.hpp"

namespace jelonek {

// Dense univariate polynomial over Scalar; the coefficient home of the
// parameter polynomials p_i(xi), q_i(xi) and of component parametrizations.
// Trailing coefficients that test zero (exactly, or within the ball policy)
// are trimmed, so degree() reflects the certified degree.
class XiPoly {
public:
    XiPoly() = default;
    explicit XiPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static XiPoly constant(const Scalar& s);
    static XiPoly variable();  // xi

    bool is_zero() const { return c_.empty(); }
    long degree() const { return long(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(long k) const { return k >= 0 && k < long(c_.size()) ? c_[size_t(k)] : Scalar(0); }
    Scalar lc() const { return c_.empty() ? Scalar(0) : c_.back(); }
    bool is_exact() const;

    XiPoly operator+(const XiPoly& o) const;
    XiPoly operator-(const XiPoly& o) const;
    XiPoly operator*(const XiPoly& o) const;
    XiPoly operator-() const;
    XiPoly& operator+=(const XiPoly& o) { *this = *this + o; return *this; }

    XiPoly scaled(const Scalar& s) const;
    XiPoly pow(long e) const;
    XiPoly derivative() const;
    Scalar eval(const Scalar& at) const;
    // xi -> factor * xi.
    XiPoly scale_argument(const Scalar& factor) const;

    // Largest coefficient magnitude of (this - o); zero when equal.
    double diff_magnitude(const XiPoly& o) const;

    std::string str(const std::string& var = "xi") const;

    // Exact view; nullopt when any coefficient is a ball.
    std::optional<std::vector<Rational>> exact_coeffs() const;

private:
    void trim();
    std::vector<Scalar> c_;
};

} // namespace jelonek
