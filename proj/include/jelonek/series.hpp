#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jelonek/scalar.hpp"
#include "jelonek/xipoly.hpp"

namespace jelonek {

inline bool coeff_zero(const Scalar& s) { return s.is_zero(); }
inline bool coeff_zero(const XiPoly& p) { return p.is_zero(); }

// Truncated Laurent polynomial in t = x^{1/m}, integer exponents, leading
// (largest) exponent first. `cut` marks the truncation frontier: terms with
// exponent > cut are exactly represented, anything at or below is unknown.
// cut == kExact means no truncation anywhere.
template <typename C>
struct Laurent {
    static constexpr long kExact = std::numeric_limits<long>::min();

    long m = 1;
    long cut = kExact;
    std::map<long, C, std::greater<long>> terms;

    bool truly_zero() const { return terms.empty() && cut == kExact; }
    bool has_terms() const { return !terms.empty(); }
    long lead() const { return terms.empty() ? kExact : terms.begin()->first; }

    void add(long e, const C& c) {
        if (cut != kExact && e <= cut) return;
        if (coeff_zero(c)) return;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_zero(it->second)) terms.erase(it);
        }
    }

    const C* at(long e) const {
        auto it = terms.find(e);
        return it == terms.end() ? nullptr : &it->second;
    }

    // Re-express over ramification m * q (exponents scale by q).
    Laurent rescaled(long q) const {
        Laurent r;
        r.m = m * q;
        r.cut = cut == kExact ? kExact : cut * q;
        for (const auto& [e, c] : terms) r.terms.emplace(e * q, c);
        return r;
    }

    // Drop terms at or below `floor`; the cut records the loss.
    void prune_below(long floor) {
        bool dropped = false;
        while (!terms.empty() && std::prev(terms.end())->first <= floor) {
            terms.erase(std::prev(terms.end()));
            dropped = true;
        }
        if (dropped) cut = std::max(cut, floor);
    }
};

template <typename C>
Laurent<C> laurent_add(const Laurent<C>& a, const Laurent<C>& b) {
    Laurent<C> r;
    r.m = a.m;
    r.cut = std::max(a.cut, b.cut);
    for (const auto& [e, c] : a.terms) r.add(e, c);
    for (const auto& [e, c] : b.terms) r.add(e, c);
    return r;
}

template <typename C>
Laurent<C> laurent_mul(const Laurent<C>& a, const Laurent<C>& b) {
    Laurent<C> r;
    r.m = a.m;
    if (a.truly_zero() || b.truly_zero()) return r;
    long cut = Laurent<C>::kExact;
    if (a.cut != Laurent<C>::kExact) {
        long bl = b.has_terms() ? std::max(b.lead(), b.cut) : b.cut;
        cut = std::max(cut, a.cut + bl);
    }
    if (b.cut != Laurent<C>::kExact) {
        long al = a.has_terms() ? std::max(a.lead(), a.cut) : a.cut;
        cut = std::max(cut, b.cut + al);
    }
    r.cut = cut;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) r.add(ea + eb, ca * cb);
    return r;
}

template <typename C>
Laurent<C> laurent_scale(const Laurent<C>& a, const C& s) {
    Laurent<C> r;
    r.m = a.m;
    r.cut = a.cut;
    if (coeff_zero(s)) return r;
    for (const auto& [e, c] : a.terms) r.add(e, c * s);
    return r;
}

// One Newton-Puiseux root at infinity: y(x) = sum c_k x^{1 - k/m}.
struct PuiseuxSeries {
    long m = 1;
    std::vector<std::pair<long, Scalar>> terms;  // (k, c_k), k strictly increasing
    long expanded_to = 0;  // every k <= expanded_to is resolved
    bool exact = false;    // the series terminates: the listed terms are all of it
    long multiplicity = 1;

    // gcd{k : c_k != 0} together with m equals 1 after normalization.
    void normalize_primitive();

    // Coefficient of x^{1 - k_num/k_den}; nullopt when the series is not
    // expanded deep enough to decide.
    std::optional<Scalar> coeff_at(long k_num, long k_den) const;

    std::string str() const;
};

// Comparison for stable output ordering.
bool puiseux_less(const PuiseuxSeries& a, const PuiseuxSeries& b);

// Finite parameter series  sum c_i x^{1 - n_i/m_i} + xi x^{1 - slot_n/slot_m}
// with strictly increasing n_i/m_i; the tail carries the free parameter.
struct PrefixLevel {
    long n = 0, m = 1;  // exponent 1 - n/m
    Scalar c;
};

struct DicriticalPrefix {
    std::vector<PrefixLevel> fixed;
    long slot_n = 0, slot_m = 1;

    long ambient_m() const;
    // Exact Laurent form (over xi-polynomials) at the given ambient
    // ramification, parameter included.
    Laurent<XiPoly> as_laurent(long ambient) const;
    // Fixed part only, as scalar Laurent.
    Laurent<Scalar> fixed_laurent(long ambient) const;

    void check_invariants() const;  // throws std::logic_error on violation

    std::string str() const;
};

// Deterministic prefix order (levels lexicographic by exponent, then
// coefficient order; shorter prefix first on ties).
bool prefix_less(const DicriticalPrefix& a, const DicriticalPrefix& b);

// F(x, phi(x, xi)) laid out by descending x-exponent with xi-polynomial
// coefficients. Exact: prefixes are finite, so no truncation enters.
struct ParamSeries {
    long m = 1;
    std::vector<std::pair<long, XiPoly>> terms;  // (t-exponent, coeff), descending

    // Leading (coefficient, x-exponent as num/den over m).
    const XiPoly& leading_coeff() const { return terms.front().second; }
    long leading_exp_num() const { return terms.front().first; }
    bool empty() const { return terms.empty(); }

    // Coefficient at x-exponent exactly zero.
    XiPoly coeff_at_zero() const;
};

} // namespace jelonek
