#include "jelonek/verifier.hpp"

#include <algorithm>

#include "jelonek/errors.hpp"
#include "jelonek/roots.hpp"

namespace jelonek {

namespace {

void egcd(long a, long b, long& x, long& y) {
    if (b == 0) { x = 1; y = 0; return; }
    long x1, y1;
    egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

// R0(p(xi), q(xi)) by cached powers.
XiPoly compose_bipoly(const Poly& R0, const XiPoly& p, const XiPoly& q) {
    long iu = R0.var_index("u"), iv = R0.var_index("v");
    std::vector<XiPoly> pu{XiPoly::constant(Scalar(Rational(1)))};
    std::vector<XiPoly> qv{XiPoly::constant(Scalar(Rational(1)))};
    XiPoly acc;
    for (const auto& [mono, c] : R0.terms()) {
        long i = long(mono[size_t(iu)]), j = long(mono[size_t(iv)]);
        while (long(pu.size()) <= i) pu.push_back(pu.back() * p);
        while (long(qv.size()) <= j) qv.push_back(qv.back() * q);
        acc = acc + (pu[size_t(i)] * qv[size_t(j)]).scaled(Scalar(c));
    }
    return acc;
}

} // namespace

std::optional<Rational> jacobian_constancy(const PolyMap& f) {
    Poly J = jacobian(f);
    if (J.is_constant() && !J.is_zero()) return J.constant_value();
    return std::nullopt;
}

Theorem1Result verify_theorem1(const NormalForm& nf, const std::vector<ComponentParam>& comps,
                               double tol) {
    Theorem1Result res;
    res.applicable = jacobian_constancy(nf.map).has_value();
    res.vacuous = comps.empty();
    if (res.vacuous) return res;
    for (const auto& comp : comps) {
        Theorem1Result::PerComponent pc;
        long dp = comp.p.degree(), dq = comp.q.degree();
        if (dp < 1 || dq < 1 || dp % nf.d != 0 || dq % nf.e != 0 || dp / nf.d != dq / nf.e) {
            pc.shape_ok = false;
            pc.detail = "degrees (" + std::to_string(dp) + ", " + std::to_string(dq) +
                        ") are not proportional to (d, e) = (" + std::to_string(nf.d) + ", " +
                        std::to_string(nf.e) + ")";
            res.components.push_back(std::move(pc));
            continue;
        }
        pc.m = dp / nf.d;
        Scalar base_p = comp.p.lc() / Scalar(nf.A);
        Scalar base_q = comp.q.lc() / Scalar(nf.B);
        // lc(p) = A C^d and lc(q) = B C^e for a single C: solvable exactly
        // when (lc p / A)^e equals (lc q / B)^d.
        Scalar lhs = base_p.pow(nf.e), rhs = base_q.pow(nf.d);
        bool consistent = scalar_eq(lhs, rhs) || (lhs - rhs).mag_upper() <= tol;
        if (!consistent) {
            pc.shape_ok = false;
            pc.detail = "head coefficients admit no common radical C";
            res.components.push_back(std::move(pc));
            continue;
        }
        long s, t;
        egcd(nf.d, nf.e, s, t);
        Scalar C = base_p.pow(s) * base_q.pow(t);
        bool cd = scalar_eq(C.pow(nf.d), base_p) || (C.pow(nf.d) - base_p).mag_upper() <= tol;
        bool ce = scalar_eq(C.pow(nf.e), base_q) || (C.pow(nf.e) - base_q).mag_upper() <= tol;
        pc.shape_ok = cd && ce && !C.is_zero();
        if (pc.shape_ok) {
            pc.C_phi = C;
            // Rescaling xi by C^{-1} pushes the heads to (A, B) when m = 1;
            // for larger m the normalizer is an m-th radical of the same data.
            if (pc.m == 1) {
                Scalar inv = Scalar(Rational(1)) / C;
                Scalar lead_p = comp.p.scale_argument(inv).lc();
                Scalar lead_q = comp.q.scale_argument(inv).lc();
                if (!(scalar_eq(lead_p, Scalar(nf.A)) && scalar_eq(lead_q, Scalar(nf.B))))
                    pc.shape_ok = false;
            }
        } else {
            pc.detail = "no C with lc p = A C^d and lc q = B C^e";
        }
        res.components.push_back(std::move(pc));
    }
    return res;
}

Cor2Result verify_cor2(const NormalForm& nf, const std::vector<ComponentParam>& comps) {
    Cor2Result res;
    res.applicable = !comps.empty();
    if (!res.applicable) return res;
    std::vector<std::pair<int, Scalar>> directions;  // (kind, ratio) kind: 0 u-inf, 1 v-inf, 2 ratio
    for (const auto& comp : comps) {
        Cor2Result::PerComponent pc;
        long dp = comp.p.degree(), dq = comp.q.degree();
        pc.special = dp <= 0 || dq <= 0;
        int kind;
        Scalar ratio(0);
        if (dp > dq) {
            kind = 0;
            pc.direction = "[1:0:0]";
        } else if (dp < dq) {
            kind = 1;
            pc.direction = "[0:1:0]";
        } else {
            kind = 2;
            ratio = comp.p.lc() / comp.q.lc();
            pc.direction = "[" + ratio.str() + ":1:0]";
        }
        directions.emplace_back(kind, ratio);
        if (dp >= 1 && dq >= 1 && dp * nf.e == dq * nf.d) {
            // c = lim u / v^{d/e}: c^e = lc(p)^e / lc(q)^d, compared exactly.
            Scalar ce = comp.p.lc().pow(nf.e) / comp.q.lc().pow(nf.d);
            Scalar Ae = Scalar(nf.A).pow(nf.e), Bd = Scalar(nf.B).pow(nf.d);
            pc.relation_head = scalar_eq(ce * Bd, Ae);
            // c^d = B^d/A^e, both sides raised to the e-th power.
            pc.relation_radical = scalar_eq(ce.pow(nf.d) * Ae.pow(nf.e), Bd.pow(nf.e));
        }
        res.components.push_back(std::move(pc));
    }
    res.one_point_at_infinity = true;
    for (size_t i = 1; i < directions.size(); ++i) {
        if (directions[i].first != directions[0].first ||
            (directions[i].first == 2 && !scalar_eq(directions[i].second, directions[0].second)))
            res.one_point_at_infinity = false;
    }
    return res;
}

ResidualInfo cross_residual(const Poly& R0, const ComponentParam& comp) {
    XiPoly composed = compose_bipoly(R0, comp.p, comp.q);
    ResidualInfo info;
    info.exact_zero = composed.is_zero() && composed.is_exact();
    for (const auto& c : composed.coeffs()) info.magnitude = std::max(info.magnitude, c.mag_upper());
    if (composed.is_zero()) info.magnitude = 0.0;
    return info;
}

CrossValidation cross_validate(const Poly& R0, const std::vector<ComponentParam>& comps,
                               double tol, long prec, std::mt19937_64& rng) {
    CrossValidation cv;
    for (const auto& comp : comps) {
        CrossValidation::PerComponent pc;
        XiPoly composed = compose_bipoly(R0, comp.p, comp.q);
        pc.exact_zero = composed.is_zero() && composed.is_exact();
        double mag = 0;
        for (const auto& c : composed.coeffs()) mag = std::max(mag, c.mag_upper());
        pc.residual = composed.is_zero() ? 0.0 : mag;
        pc.ok = composed.is_zero() || mag <= tol;
        cv.components.push_back(pc);
    }

    // Converse direction: roots of R_0 along a random rational line must be
    // reachable from some component.
    if (!R0.is_constant() && !comps.empty()) {
        std::uniform_int_distribution<long> coord(-50, 50);
        for (int line = 0; line < 2; ++line) {
            Poly sub(R0.vars());
            Rational u0, v0, du, dv;
            std::vector<Rational> univ;
            for (int attempt = 0; attempt < 20; ++attempt) {
                u0 = Rational(coord(rng));
                v0 = Rational(coord(rng));
                du = Rational(coord(rng));
                dv = Rational(coord(rng));
                if (du == 0 && dv == 0) continue;
                // Substitute (u, v) = (u0 + du t, v0 + dv t) and collect in t.
                long iu = R0.var_index("u"), iv = R0.var_index("v");
                std::vector<Rational> poly{Rational(0)};
                auto mul_lin = [](std::vector<Rational> f, const Rational& a, const Rational& b) {
                    // f * (a + b t)
                    std::vector<Rational> out(f.size() + 1, Rational(0));
                    for (size_t i = 0; i < f.size(); ++i) {
                        out[i] += f[i] * a;
                        out[i + 1] += f[i] * b;
                    }
                    return out;
                };
                poly.assign(1, Rational(0));
                for (const auto& [mono, c] : R0.terms()) {
                    std::vector<Rational> term{c};
                    for (uint32_t k = 0; k < mono[size_t(iu)]; ++k) term = mul_lin(term, u0, du);
                    for (uint32_t k = 0; k < mono[size_t(iv)]; ++k) term = mul_lin(term, v0, dv);
                    if (term.size() > poly.size()) poly.resize(term.size(), Rational(0));
                    for (size_t i = 0; i < term.size(); ++i) poly[i] += term[i];
                }
                rupoly::trim(poly);
                if (rupoly::degree(poly) >= 1) { univ = std::move(poly); break; }
            }
            if (univ.empty()) continue;
            RootOptions ropts;
            ropts.prec = prec;
            for (const auto& root : roots_of_exact(univ, ropts)) {
                Scalar us = Scalar(u0) + Scalar(du) * root.value;
                Scalar vs = Scalar(v0) + Scalar(dv) * root.value;
                bool hit = false;
                for (const auto& comp : comps) {
                    Scalar r = param_membership_residual(comp.p, comp.q, us, vs);
                    if (r.is_zero() || r.mag_upper() <= tol) { hit = true; break; }
                }
                ++cv.converse_checked;
                if (!hit) cv.converse_ok = false;
            }
        }
    }
    return cv;
}

std::optional<long> fiber_count_at(const NormalForm& nf, const Rational& u0, const Rational& v0,
                                   long expected_N, long prec) {
    std::vector<Rational> res = resultant_x_at_value(nf, u0, v0);
    if (rupoly::degree(res) != expected_N) return std::nullopt;
    long count = 0;
    RootOptions ropts;
    ropts.prec = prec;
    for (const auto& [factor, mult] : rupoly::squarefree_decompose(res)) {
        long simple = 0;
        for (const auto& r : roots_of_exact(factor, ropts)) simple += r.multiplicity;
        count += simple * mult;
    }
    return count;
}

long fiber_count_generic(const NormalForm& nf, long expected_N, long prec, std::mt19937_64& rng,
                         int max_attempts) {
    std::uniform_int_distribution<long> coord(-1'000'000, 1'000'000);
    for (int i = 0; i < max_attempts; ++i) {
        auto c = fiber_count_at(nf, Rational(coord(rng)), Rational(coord(rng)), expected_N, prec);
        if (c) return *c;
    }
    throw resource_error("verifier/generic-sampling",
                         "no generic value found for fiber counting");
}

} // namespace jelonek
