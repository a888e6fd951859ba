#include "jelonek/series.hpp"

#include <sstream>
#include <stdexcept>

namespace jelonek {

void PuiseuxSeries::normalize_primitive() {
    long g = m;
    for (const auto& [k, c] : terms) g = gcd_long(g, k);
    if (g <= 1) return;
    for (auto& [k, c] : terms) k /= g;
    m /= g;
    expanded_to /= g;
}

std::optional<Scalar> PuiseuxSeries::coeff_at(long k_num, long k_den) const {
    // Query exponent 1 - k_num/k_den against stored grid 1 - k/m.
    // Matching k requires k_num * m == k * k_den.
    long prod = k_num * m;
    if (prod % k_den != 0) {
        // Off-grid exponent: coefficient is zero provided we are expanded far
        // enough to be sure no such term exists.
        if (exact || rat(k_num, k_den) <= rat(expanded_to, m)) return Scalar(0);
        return std::nullopt;
    }
    long k = prod / k_den;
    for (const auto& [kk, c] : terms)
        if (kk == k) return c;
    if (exact || k <= expanded_to) return Scalar(0);
    return std::nullopt;
}

std::string PuiseuxSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*x^(1-" << k << "/" << m << ")";
    }
    if (first) out << "0";
    if (!exact) out << " + O(x^(1-" << expanded_to + 1 << "/" << m << "))";
    if (multiplicity > 1) out << " [mult " << multiplicity << "]";
    return out.str();
}

bool puiseux_less(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    size_t n = std::min(a.terms.size(), b.terms.size());
    for (size_t i = 0; i < n; ++i) {
        Rational ea(a.terms[i].first, a.m), eb(b.terms[i].first, b.m);
        ea.canonicalize();
        eb.canonicalize();
        if (ea != eb) return ea < eb;
        int c = scalar_order(a.terms[i].second, b.terms[i].second);
        if (c != 0) return c < 0;
    }
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
    return a.multiplicity < b.multiplicity;
}

long DicriticalPrefix::ambient_m() const {
    long m = slot_m;
    for (const auto& lvl : fixed) m = lcm_long(m, lvl.m);
    return m;
}

Laurent<XiPoly> DicriticalPrefix::as_laurent(long ambient) const {
    Laurent<XiPoly> phi;
    phi.m = ambient;
    for (const auto& lvl : fixed) {
        long e = ambient - lvl.n * (ambient / lvl.m);
        phi.add(e, XiPoly::constant(lvl.c));
    }
    phi.add(ambient - slot_n * (ambient / slot_m), XiPoly::variable());
    return phi;
}

Laurent<Scalar> DicriticalPrefix::fixed_laurent(long ambient) const {
    Laurent<Scalar> rho;
    rho.m = ambient;
    for (const auto& lvl : fixed) rho.add(ambient - lvl.n * (ambient / lvl.m), lvl.c);
    return rho;
}

void DicriticalPrefix::check_invariants() const {
    Rational prev(-1);
    for (const auto& lvl : fixed) {
        if (lvl.m <= 0) throw std::logic_error("prefix level with non-positive mult");
        Rational e(lvl.n, lvl.m);
        e.canonicalize();
        if (e <= prev && !(prev == -1)) throw std::logic_error("prefix exponents not increasing");
        if (e < 0) throw std::logic_error("negative prefix exponent");
        prev = e;
    }
    Rational s(slot_n, slot_m);
    s.canonicalize();
    if (s <= prev) throw std::logic_error("parameter slot does not extend the prefix");
}

std::string DicriticalPrefix::str() const {
    std::ostringstream out;
    for (const auto& lvl : fixed)
        out << "(" << lvl.c.str() << ")*x^(1-" << lvl.n << "/" << lvl.m << ") + ";
    out << "xi*x^(1-" << slot_n << "/" << slot_m << ")";
    return out.str();
}

bool prefix_less(const DicriticalPrefix& a, const DicriticalPrefix& b) {
    size_t n = std::min(a.fixed.size(), b.fixed.size());
    for (size_t i = 0; i < n; ++i) {
        Rational ea(a.fixed[i].n, a.fixed[i].m), eb(b.fixed[i].n, b.fixed[i].m);
        ea.canonicalize();
        eb.canonicalize();
        if (ea != eb) return ea < eb;
        int c = scalar_order(a.fixed[i].c, b.fixed[i].c);
        if (c != 0) return c < 0;
    }
    if (a.fixed.size() != b.fixed.size()) return a.fixed.size() < b.fixed.size();
    Rational sa(a.slot_n, a.slot_m), sb(b.slot_n, b.slot_m);
    sa.canonicalize();
    sb.canonicalize();
    return sa < sb;
}

XiPoly ParamSeries::coeff_at_zero() const {
    for (const auto& [e, c] : terms)
        if (e == 0) return c;
    return XiPoly();
}

} // namespace jelonek
