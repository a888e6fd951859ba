#include "jelonek/xipoly.hpp"

#include <sstream>

namespace jelonek {

XiPoly XiPoly::constant(const Scalar& s) { return XiPoly(std::vector<Scalar>{s}); }

XiPoly XiPoly::variable() { return XiPoly({Scalar(0), Scalar(1)}); }

bool XiPoly::is_exact() const {
    for (const auto& c : c_)
        if (!c.is_exact()) return false;
    return true;
}

void XiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XiPoly XiPoly::operator+(const XiPoly& o) const {
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return XiPoly(std::move(r));
}

XiPoly XiPoly::operator-(const XiPoly& o) const { return *this + (-o); }

XiPoly XiPoly::operator-() const {
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    XiPoly p;
    p.c_ = std::move(r);
    return p;
}

XiPoly XiPoly::operator*(const XiPoly& o) const {
    if (c_.empty() || o.c_.empty()) return XiPoly();
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return XiPoly(std::move(r));
}

XiPoly XiPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return XiPoly();
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return XiPoly(std::move(r));
}

XiPoly XiPoly::pow(long e) const {
    XiPoly acc = XiPoly::constant(Scalar(1));
    XiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

XiPoly XiPoly::derivative() const {
    if (c_.size() <= 1) return XiPoly();
    std::vector<Scalar> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Scalar(long(i)));
    return XiPoly(std::move(r));
}

Scalar XiPoly::eval(const Scalar& at) const {
    Scalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

XiPoly XiPoly::scale_argument(const Scalar& factor) const {
    std::vector<Scalar> r = c_;
    Scalar f(1);
    for (size_t i = 1; i < r.size(); ++i) {
        f *= factor;
        r[i] *= f;
    }
    return XiPoly(std::move(r));
}

double XiPoly::diff_magnitude(const XiPoly& o) const {
    XiPoly d = *this - o;
    double m = 0;
    for (const auto& c : d.c_) {
        if (c.is_exact()) {
            m = std::max(m, c.mag_upper());
        } else {
            m = std::max(m, c.ball().mag_upper());
        }
    }
    return m;
}

std::string XiPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        const Scalar& c = c_[i];
        std::string cs;
        bool neg = false;
        if (c.is_exact()) {
            Rational r = c.rational();
            neg = r < 0;
            cs = rat_to_string(neg ? Rational(-r) : r);
        } else {
            cs = c.str();
        }
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool show_coeff = (i == 0) || cs != "1";
        if (show_coeff) out << cs;
        if (i > 0) {
            if (show_coeff) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

std::optional<std::vector<Rational>> XiPoly::exact_coeffs() const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& c : c_) {
        if (!c.is_exact()) return std::nullopt;
        r.push_back(c.rational());
    }
    return r;
}

} // namespace jelonek
