#include "jelonek/puiseux.hpp"

#include <algorithm>

#include "jelonek/errors.hpp"
#include "jelonek/resultant.hpp"

namespace jelonek {

namespace {

long binom_long(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Laurent<Scalar> shifted(const Laurent<Scalar>& a, long delta) {
    Laurent<Scalar> r;
    r.m = a.m;
    r.cut = a.cut == Laurent<Scalar>::kExact ? a.cut : a.cut + delta;
    for (const auto& [e, c] : a.terms) r.terms.emplace(e + delta, c);
    return r;
}

struct HullPoint {
    long j;
    long e;
};

// Upper concave hull over z-degree/lead-exponent points, left to right.
std::vector<HullPoint> upper_hull(std::vector<HullPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) {
        return a.j < b.j;
    });
    std::vector<HullPoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b above segment a-p: cross gives concavity test
            long long lhs = (long long)(b.e - a.e) * (p.j - a.j);
            long long rhs = (long long)(p.e - a.e) * (b.j - a.j);
            if (lhs <= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    return hull;
}

struct Engine {
    const Poly& F;
    PuiseuxOptions opts;
    long n;
    std::vector<PuiseuxSeries> out;
    long nodes = 0;
    std::optional<bool> squarefree;

    struct Node {
        long m = 1;
        std::vector<Laurent<Scalar>> g;
        std::vector<std::pair<Rational, Scalar>> prefix;  // (x-exponent, coeff)
        std::optional<Rational> tau_prev;                 // x-exponent of last term
        long budget = 0;
    };

    bool input_squarefree() {
        if (squarefree) return *squarefree;
        // Cheap one-sided probe first: a squarefree specialization certifies
        // a squarefree input.
        Poly Fy = F.derivative("y");
        for (long t : {3, 7, 11}) {
            std::vector<Rational> fy, fyy;
            for (long j = 0; j <= F.degree_in("y"); ++j)
                fy.push_back(F.coeff_of("y", j).eval_var("x", Rational(t)).constant_value());
            for (long j = 0; j <= Fy.degree_in("y"); ++j)
                fyy.push_back(Fy.coeff_of("y", j).eval_var("x", Rational(t)).constant_value());
            if (rupoly::degree(rupoly::gcd(fy, fyy)) == 0) {
                squarefree = true;
                return true;
            }
        }
        squarefree = !resultant_y_of(F, Fy).is_zero();
        return *squarefree;
    }

    void emit(const Node& nd, long mult, bool exact) {
        if (mult <= 0) return;
        if (!exact && mult > 1 && input_squarefree())
            throw resource_error("puiseux/max-order",
                                 "max_order too small to separate branches of a squarefree input");
        PuiseuxSeries s;
        s.m = nd.m;
        for (const auto& [e, c] : nd.prefix) {
            Rational k = (1 - e) * nd.m;
            k.canonicalize();
            if (k.get_den() != 1) throw std::logic_error("prefix exponent off the t-grid");
            s.terms.emplace_back(long(k.get_num().get_si()), c);
        }
        std::sort(s.terms.begin(), s.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        s.exact = exact;
        s.multiplicity = mult;
        s.expanded_to = exact ? (s.terms.empty() ? 0 : s.terms.back().first)
                              : opts.max_order * nd.m;
        s.normalize_primitive();
        out.push_back(std::move(s));
    }

    void expand(Node nd) {
        if (++nodes > opts.node_cap)
            throw resource_error("puiseux/node-cap", "expansion node budget exhausted");
        const long sigma_t = (1 - opts.max_order) * nd.m;  // depth floor, t-units

        // Prune irrelevant depth in every coefficient.
        for (long j = 0; j <= n; ++j) {
            long floor_j = sigma_t * (n - j) - std::abs(sigma_t) - nd.m * 4 - 8;
            // Keep a margin below the theoretical floor sigma_t*(n-j).
            nd.g[size_t(j)].prune_below(floor_j);
        }

        // Exact termination: z^j0 divides G with certainty.
        long j0 = 0;
        while (j0 <= n && nd.g[size_t(j0)].truly_zero()) ++j0;

        std::vector<HullPoint> pts;
        for (long j = 0; j <= n; ++j)
            if (nd.g[size_t(j)].has_terms()) pts.push_back({j, nd.g[size_t(j)].lead()});
        if (pts.empty()) throw std::logic_error("empty Newton polygon");

        long consumed = 0;
        auto hull = upper_hull(std::move(pts));
        for (size_t i = 0; i + 1 < hull.size(); ++i) {
            const auto& L = hull[i];
            const auto& R = hull[i + 1];
            Rational tau_t(L.e - R.e, R.j - L.j);  // slope in t-units
            tau_t.canonicalize();
            Rational tau_x = tau_t / nd.m;
            if (nd.tau_prev && !(tau_x < *nd.tau_prev)) continue;
            if (!nd.tau_prev && tau_x > 1)
                throw std::logic_error("slope above 1 for a monic input");
            if (tau_x < Rational(1 - opts.max_order)) continue;  // below depth

            // Characteristic polynomial over the edge.
            std::vector<Scalar> chi(size_t(R.j - L.j) + 1, Scalar(0));
            for (long j = L.j; j <= R.j; ++j) {
                const auto& gj = nd.g[size_t(j)];
                if (!gj.has_terms()) continue;
                Rational on_line = Rational(L.e) - tau_t * (j - L.j);
                if (Rational(gj.lead()) == on_line)
                    chi[size_t(j - L.j)] = gj.terms.begin()->second;
            }
            auto chi_roots = roots_of(XiPoly(std::move(chi)), opts.roots);

            long q = long(tau_t.get_den().get_si());
            long p = long(tau_t.get_num().get_si());
            for (const auto& root : chi_roots) {
                consumed += root.multiplicity;
                Node child;
                child.m = nd.m * q;
                child.budget = root.multiplicity;
                child.prefix = nd.prefix;
                child.prefix.emplace_back(tau_x, root.value);
                child.tau_prev = tau_x;
                child.g.assign(size_t(n) + 1, Laurent<Scalar>{});
                std::vector<Laurent<Scalar>> resc(size_t(n) + 1);
                for (long j = 0; j <= n; ++j) resc[size_t(j)] = nd.g[size_t(j)].rescaled(q);
                std::vector<Scalar> cpow{Scalar(Rational(1))};
                for (long k = 1; k <= n; ++k) cpow.push_back(cpow.back() * root.value);
                for (long jnew = 0; jnew <= n; ++jnew) {
                    Laurent<Scalar> acc;
                    acc.m = child.m;
                    for (long j = jnew; j <= n; ++j) {
                        if (resc[size_t(j)].truly_zero()) continue;
                        Scalar factor = cpow[size_t(j - jnew)] * Scalar(binom_long(j, jnew));
                        Laurent<Scalar> part = laurent_scale(resc[size_t(j)], factor);
                        acc = laurent_add(acc, shifted(part, p * (j - jnew)));
                    }
                    child.g[size_t(jnew)] = std::move(acc);
                }
                expand(std::move(child));
            }
        }

        long exact_emit = 0;
        if (j0 > 0) exact_emit = j0;
        emit(nd, exact_emit, true);
        long leftover = nd.budget - consumed - exact_emit;
        if (leftover < 0) throw std::logic_error("Newton polygon over-consumed its budget");
        emit(nd, leftover, false);
    }
};

double xipoly_mag(const XiPoly& p) {
    double m = 0;
    for (const auto& c : p.coeffs()) m = std::max(m, c.mag_upper());
    return m;
}

} // namespace

static std::vector<PuiseuxSeries> roots_at_infinity_once(const Poly& F,
                                                          const PuiseuxOptions& opts) {
    long n = F.degree_in("y");
    Engine eng{F, opts, n, {}, 0, {}};
    Engine::Node root;
    root.m = 1;
    root.budget = n;
    root.g.assign(size_t(n) + 1, Laurent<Scalar>{});
    for (long j = 0; j <= n; ++j) {
        Laurent<Scalar>& gj = root.g[size_t(j)];
        gj.m = 1;
        Poly cj = F.coeff_of("y", j);
        for (const auto& [mono, coef] : cj.terms()) {
            long i = long(mono[size_t(cj.var_index("x"))]);
            gj.add(i, Scalar(coef));
        }
    }
    eng.expand(std::move(root));

    long total = 0;
    for (const auto& s : eng.out) total += s.multiplicity;
    if (total != n) throw std::logic_error("Puiseux root count does not match degree");
    std::sort(eng.out.begin(), eng.out.end(), puiseux_less);
    return eng.out;
}

std::vector<PuiseuxSeries> roots_at_infinity(const Poly& F, const PuiseuxOptions& opts) {
    long n = F.degree_in("y");
    if (n < 1 || n != F.degree() || !F.coeff_of("y", n).is_constant())
        throw input_error("puiseux", "input must be monic in y with deg_y = deg");
    // Deep towers with large coefficients erode ball radii; escalate the
    // working precision before giving up.
    PuiseuxOptions cur = opts;
    for (int tier = 0;; ++tier) {
        try {
            return roots_at_infinity_once(F, cur);
        } catch (const precision_error&) {
            if (tier >= 4) throw;
            cur.roots.prec *= 2;
        }
    }
}

ParamSeries substitute_param(const Poly& F, const DicriticalPrefix& prefix, long trunc) {
    prefix.check_invariants();
    long degy = F.degree_in("y");
    long M = prefix.ambient_m();
    Laurent<XiPoly> phi = prefix.as_laurent(M);
    long xi = F.var_index("x");

    auto embed_coeff = [&](const Poly& c) {
        Laurent<XiPoly> r;
        r.m = M;
        for (const auto& [mono, coef] : c.terms())
            r.add(long(mono[size_t(xi)]) * M, XiPoly::constant(Scalar(coef)));
        return r;
    };

    Laurent<XiPoly> acc;
    acc.m = M;
    for (long j = degy; j >= 0; --j) {
        acc = laurent_mul(acc, phi);
        acc = laurent_add(acc, embed_coeff(F.coeff_of("y", j)));
    }
    if (!acc.has_terms())
        throw std::logic_error("parameter substitution produced the zero series");

    ParamSeries ps;
    ps.m = M;
    bool any_below = false;
    for (const auto& [e, c] : acc.terms) {
        if (trunc != 1'000'000 && rat(e, M) < Rational(-trunc)) {
            any_below = true;
            continue;
        }
        ps.terms.emplace_back(e, c);
    }
    if (ps.terms.empty()) {
        if (any_below)
            throw resource_error("puiseux/trunc",
                                 "truncation hides every term; increase trunc");
        throw std::logic_error("parameter substitution produced the zero series");
    }
    return ps;
}

FactorizationReport factorization_check(const Poly& F, const std::vector<PuiseuxSeries>& roots,
                                        const Rational& A, double tol, long prec) {
    long M = 1;
    for (const auto& r : roots) M = lcm_long(M, r.m);
    long xi = F.var_index("x");

    Laurent<XiPoly> prod;
    prod.m = M;
    prod.add(0, XiPoly::constant(Scalar(A)));
    for (const auto& r : roots) {
        Laurent<XiPoly> factor;
        factor.m = M;
        factor.add(0, XiPoly::variable());  // stands for y
        for (const auto& [k, c] : r.terms)
            factor.add(M - k * (M / r.m), XiPoly::constant(-c));
        if (!r.exact) factor.cut = (M / r.m) * (r.m - r.expanded_to - 1);
        for (long i = 0; i < r.multiplicity; ++i) prod = laurent_mul(prod, factor);
    }

    Laurent<XiPoly> fml;
    fml.m = M;
    for (const auto& [mono, coef] : F.terms()) {
        long i = long(mono[size_t(xi)]);
        long j = long(mono[size_t(F.var_index("y"))]);
        std::vector<Scalar> ypow(size_t(j) + 1, Scalar(0));
        ypow[size_t(j)] = Scalar(coef);
        fml.add(i * M, XiPoly(std::move(ypow)));
    }

    Laurent<XiPoly> diff = laurent_add(prod, laurent_scale(fml, XiPoly::constant(Scalar(Rational(-1)))));
    FactorizationReport rep;
    rep.ok = true;
    (void)prec;
    for (const auto& [e, c] : diff.terms) {
        double mag = xipoly_mag(c);
        rep.residual = std::max(rep.residual, mag);
        if (mag > tol && rep.ok) {
            rep.ok = false;
            rep.first_mismatch = "x-exponent " + std::to_string(e) + "/" + std::to_string(M) +
                                 ": " + c.str("y");
        }
    }
    return rep;
}

std::optional<Rational> substitution_defect(const Poly& F, const PuiseuxSeries& s, long prec) {
    long M = s.m;
    Laurent<Scalar> u;
    u.m = M;
    for (const auto& [k, c] : s.terms) u.add(M - k, c);
    if (!s.exact) u.cut = M - s.expanded_to - 1;

    long degy = F.degree_in("y");
    long xi = F.var_index("x");
    Laurent<Scalar> acc;
    acc.m = M;
    (void)prec;
    for (long j = degy; j >= 0; --j) {
        acc = laurent_mul(acc, u);
        Poly cj = F.coeff_of("y", j);
        for (const auto& [mono, coef] : cj.terms())
            acc.add(long(mono[size_t(xi)]) * M, Scalar(coef));
    }
    // A surviving term above the truncation frontier is a genuine defect; an
    // inexact series only guarantees the residue sits at or below the cut.
    for (const auto& [e, c] : acc.terms)
        if (!c.is_zero()) return rat(e, M);
    if (acc.cut == Laurent<Scalar>::kExact) return std::nullopt;
    Rational bound(acc.cut, M);
    bound.canonicalize();
    return bound;
}

} // namespace jelonek
