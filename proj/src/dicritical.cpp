#include "jelonek/dicritical.hpp"

#include <algorithm>
#include <map>

#include "jelonek/bareiss.hpp"
#include "jelonek/errors.hpp"
#include "jelonek/roots.hpp"

namespace jelonek {

namespace {

struct NeedDeeper {
    Rational required;  // expansion order (x-units) the root lists must reach
};

Rational slot_ratio(const DicriticalPrefix& p) {
    Rational r(p.slot_n, p.slot_m);
    r.canonicalize();
    return r;
}

// Weighted root count: multiplicities included.
long weighted_count(const std::vector<long>& idx, const std::vector<PuiseuxSeries>& roots) {
    long n = 0;
    for (long k : idx) n += roots[size_t(k)].multiplicity;
    return n;
}

// Does the series agree with the prefix's fixed part through every exponent
// above the parameter slot?
bool matches_prefix(const PuiseuxSeries& s, const DicriticalPrefix& prefix) {
    Rational slot = slot_ratio(prefix);
    if (!s.exact && rat(s.expanded_to, s.m) < slot) throw NeedDeeper{slot + 1};
    // Every nonzero prefix level must appear in the series.
    for (const auto& lvl : prefix.fixed) {
        auto c = s.coeff_at(lvl.n, lvl.m);
        if (!c) throw NeedDeeper{slot + 1};
        if (!scalar_eq(*c, lvl.c)) return false;
    }
    // Every series term above the slot must be a prefix level.
    for (const auto& [k, c] : s.terms) {
        Rational e = rat(k, s.m);
        if (e >= slot) continue;  // at or below the slot exponent
        bool found = false;
        for (const auto& lvl : prefix.fixed) {
            if (rat(lvl.n, lvl.m) == e) { found = scalar_eq(lvl.c, c); break; }
        }
        if (!found) return false;
    }
    return true;
}

// Coefficient of the series at the prefix slot exponent (the a_ik / b_ik data).
Scalar slot_coefficient(const PuiseuxSeries& s, const DicriticalPrefix& prefix) {
    auto c = s.coeff_at(prefix.slot_n, prefix.slot_m);
    if (!c) throw NeedDeeper{slot_ratio(prefix) + 1};
    return *c;
}

AssociatedNode build_node(const NormalForm& nf, DicriticalPrefix prefix,
                          const std::vector<PuiseuxSeries>& rootsP,
                          const std::vector<PuiseuxSeries>& rootsQ) {
    AssociatedNode node;
    node.prefix = std::move(prefix);
    node.m = node.prefix.ambient_m();
    ParamSeries psP = substitute_param(nf.map.P, node.prefix);
    ParamSeries psQ = substitute_param(nf.map.Q, node.prefix);
    node.p = psP.leading_coeff();
    node.q = psQ.leading_coeff();
    node.a = rat(psP.leading_exp_num(), node.m);
    node.a.canonicalize();
    node.b = rat(psQ.leading_exp_num(), node.m);
    node.b.canonicalize();
    for (size_t k = 0; k < rootsP.size(); ++k)
        if (matches_prefix(rootsP[k], node.prefix)) node.S.push_back(long(k));
    for (size_t k = 0; k < rootsQ.size(); ++k)
        if (matches_prefix(rootsQ[k], node.prefix)) node.T.push_back(long(k));
    return node;
}

// Candidate slots strictly below the current exponent: a side contributes a
// level wherever its leading coefficient stops being a monomial (two of its
// points tie), and both sides jointly contribute the exponent where the
// larger of the two leading exponents reaches zero (the dicritical slot).
std::optional<Rational> next_event(const std::vector<std::pair<long, long>>& ptsP, long MP,
                                   const std::vector<std::pair<long, long>>& ptsQ, long MQ,
                                   const Rational& below) {
    std::optional<Rational> best;
    auto consider = [&](const Rational& beta) {
        if (beta < below && (!best || beta > *best)) best = beta;
    };
    auto side_edges = [&](const std::vector<std::pair<long, long>>& pts, long M) {
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                if (pts[i].first == pts[j].first) continue;
                Rational beta(pts[i].second - pts[j].second, pts[j].first - pts[i].first);
                beta /= M;
                beta.canonicalize();
                if (!(beta < below)) continue;
                // A tie must actually lead the side's expansion.
                Rational top;
                bool first = true;
                long attain = 0;
                for (const auto& [jj, ee] : pts) {
                    Rational v = rat(ee, M) + beta * jj;
                    if (first || v > top) { top = v; first = false; }
                }
                for (const auto& [jj, ee] : pts)
                    if (rat(ee, M) + beta * jj == top) ++attain;
                if (attain >= 2) consider(beta);
            }
    };
    side_edges(ptsP, MP);
    side_edges(ptsQ, MQ);

    // Joint zero crossing of max(E_P, E_Q).
    auto emax = [&](const Rational& beta) {
        bool first = true;
        Rational top;
        for (const auto& [j, e] : ptsP) {
            Rational v = rat(e, MP) + beta * j;
            if (first || v > top) { top = v; first = false; }
        }
        for (const auto& [j, e] : ptsQ) {
            Rational v = rat(e, MQ) + beta * j;
            if (first || v > top) { top = v; first = false; }
        }
        return top;
    };
    auto crossings = [&](const std::vector<std::pair<long, long>>& pts, long M) {
        for (const auto& [j, e] : pts) {
            if (j < 1) continue;
            Rational beta(-e, j);
            beta /= M;
            beta.canonicalize();
            if (beta < below && emax(beta) == 0) consider(beta);
        }
    };
    crossings(ptsP, MP);
    crossings(ptsQ, MQ);
    return best;
}

// z-coefficient leading points of F(x, rho + z), rho the scalar fixed part.
std::vector<std::pair<long, long>> side_points(const Poly& F, const Laurent<Scalar>& rho,
                                               long M) {
    long degy = F.degree_in("y");
    long xi = F.var_index("x");
    // g_j = sum_{l >= j} C(l, j) a_l(x) rho^{l-j}
    std::vector<Laurent<Scalar>> rho_pow(size_t(degy) + 1);
    rho_pow[0].m = M;
    rho_pow[0].add(0, Scalar(Rational(1)));
    for (long k = 1; k <= degy; ++k) rho_pow[size_t(k)] = laurent_mul(rho_pow[size_t(k - 1)], rho);

    std::vector<std::pair<long, long>> pts;
    for (long j = 0; j <= degy; ++j) {
        Laurent<Scalar> gj;
        gj.m = M;
        for (long l = j; l <= degy; ++l) {
            Poly al = F.coeff_of("y", l);
            if (al.is_zero()) continue;
            long binom = 1;
            for (long i = 1; i <= j; ++i) binom = binom * (l - j + i) / i;
            Laurent<Scalar> part;
            part.m = M;
            for (const auto& [mono, coef] : al.terms())
                part.add(long(mono[size_t(xi)]) * M, Scalar(coef * binom));
            gj = laurent_add(gj, laurent_mul(part, rho_pow[size_t(l - j)]));
        }
        if (gj.has_terms()) pts.emplace_back(j, gj.lead());
    }
    return pts;
}

Scalar scalar_det(std::vector<std::vector<Scalar>> m) {
    return bareiss_determinant<Scalar>(
        std::move(m), Scalar(Rational(1)), [](const Scalar& s) { return s.is_zero(); },
        [](const Scalar& a, const Scalar& b) { return a / b; });
}

void egcd(long a, long b, long& x, long& y) {
    if (b == 0) { x = 1; y = 0; return; }
    long x1, y1;
    egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

std::string rat_str(const Rational& r) { return rat_to_string(r); }

// Coefficientwise agreement: exact zero, ball-policy zero, or below tol.
bool xipoly_agree(const XiPoly& a, const XiPoly& b, double tol) {
    XiPoly d = a - b;
    if (d.is_zero()) return true;
    for (const auto& c : d.coeffs())
        if (!c.is_zero() && c.mag_upper() > tol) return false;
    return true;
}

} // namespace

long AssociatedNode::a_int() const {
    Rational v = a * m;
    v.canonicalize();
    return long(v.get_num().get_si());
}

long AssociatedNode::b_int() const {
    Rational v = b * m;
    v.canonicalize();
    return long(v.get_num().get_si());
}

long AssociatedNode::slot_n_over_m_int() const {
    Rational v = slot_ratio(prefix) * m;
    v.canonicalize();
    return long(v.get_num().get_si());
}

AssociatedNode root_node(const NormalForm& nf, const std::vector<PuiseuxSeries>& rootsP,
                         const std::vector<PuiseuxSeries>& rootsQ,
                         const DicriticalOptions& opts) {
    (void)opts;
    DicriticalPrefix phi0;  // xi * x
    AssociatedNode node = build_node(nf, phi0, rootsP, rootsQ);
    node.level = 0;
    if (node.a != nf.degP() || node.b != nf.degQ())
        throw std::logic_error("root node exponents disagree with the degrees");
    if (node.p.degree() != nf.degP() || node.q.degree() != nf.degQ())
        throw std::logic_error("root node leading polynomials have wrong degree");
    return node;
}

NodeStatus classify_node(AssociatedNode& node, const DicriticalOptions& opts) {
    const Rational zero(0);
    Rational mx = std::max(node.a, node.b);
    if (mx == zero) {
        long degP = node.a == zero ? node.p.degree() : -1;
        long degQ = node.b == zero ? node.q.degree() : -1;
        if (std::max(degP, degQ) > 0) {
            node.status = NodeStatus::dicritical;
            return node.status;
        }
    }
    if (node.a <= zero && node.b <= zero) {
        node.status = NodeStatus::dead;
        return node.status;
    }
    bool pa = node.a > zero, qa = node.b > zero;
    std::vector<Scalar> roots;
    RootOptions ropts = opts.roots;
    ropts.prec = opts.prec;
    if (pa && qa) {
        auto pe = node.p.exact_coeffs();
        auto qe = node.q.exact_coeffs();
        if (pe && qe) {
            auto g = rupoly::gcd(*pe, *qe);
            for (const auto& r : roots_of_exact(g, ropts)) roots.push_back(r.value);
        } else {
            const XiPoly& lead = node.p.degree() <= node.q.degree() ? node.p : node.q;
            const XiPoly& other = node.p.degree() <= node.q.degree() ? node.q : node.p;
            for (const auto& r : roots_of(lead, ropts))
                if (other.eval(r.value).is_zero()) roots.push_back(r.value);
        }
    } else {
        const XiPoly& active = pa ? node.p : node.q;
        for (const auto& r : roots_of(active, ropts)) roots.push_back(r.value);
    }
    node.branch_roots = std::move(roots);
    node.status = node.branch_roots.empty() ? NodeStatus::dead : NodeStatus::branchable;
    return node.status;
}

std::vector<AssociatedNode> expand_node(const NormalForm& nf, const AssociatedNode& node,
                                        const std::vector<PuiseuxSeries>& rootsP,
                                        const std::vector<PuiseuxSeries>& rootsQ,
                                        const DicriticalOptions& opts) {
    (void)opts;
    std::vector<AssociatedNode> children;
    Rational beta_slot = 1 - slot_ratio(node.prefix);
    for (const Scalar& c : node.branch_roots) {
        std::vector<PrefixLevel> fixed = node.prefix.fixed;
        fixed.push_back({node.prefix.slot_n, node.prefix.slot_m, c});
        DicriticalPrefix probe;
        probe.fixed = fixed;
        long M = 1;
        for (const auto& lvl : fixed) M = lcm_long(M, lvl.m);
        Laurent<Scalar> rho;
        rho.m = M;
        for (const auto& lvl : fixed) rho.add(M - lvl.n * (M / lvl.m), lvl.c);

        auto beta = next_event(side_points(nf.map.P, rho, M), M,
                               side_points(nf.map.Q, rho, M), M, beta_slot);
        if (!beta) continue;  // direction cannot refine further

        Rational alpha = 1 - *beta;  // slot exponent ratio n/m
        alpha.canonicalize();
        probe.slot_n = long(alpha.get_num().get_si());
        probe.slot_m = long(alpha.get_den().get_si());
        probe.check_invariants();

        AssociatedNode child = build_node(nf, probe, rootsP, rootsQ);
        child.level = node.level + 1;
        child.parent_c = c;
        for (long k : node.S)
            if (scalar_eq(slot_coefficient(rootsP[size_t(k)], node.prefix), c))
                child.parent_S0.push_back(k);
        for (long k : node.T)
            if (scalar_eq(slot_coefficient(rootsQ[size_t(k)], node.prefix), c))
                child.parent_T0.push_back(k);
        children.push_back(std::move(child));
    }
    return children;
}

ComponentParam compute_f_phi(const NormalForm& nf, const DicriticalPrefix& phi,
                             bool jacobian_constant, const DicriticalOptions& opts) {
    (void)opts;
    ComponentParam comp;
    comp.phi = phi;
    comp.p = substitute_param(nf.map.P, phi).coeff_at_zero();
    comp.q = substitute_param(nf.map.Q, phi).coeff_at_zero();
    long dp = comp.p.degree(), dq = comp.q.degree();
    if (std::max(dp, dq) <= 0)
        throw std::logic_error("dicritical prefix produced a constant value pair");
    if (jacobian_constant && dp > 0 && dq > 0 && dp % nf.d == 0 && dq % nf.e == 0 &&
        dp / nf.d == dq / nf.e) {
        long D = dp / nf.d;
        // C with C^d = lc(p)/A and C^e = lc(q)/B via a coprime combination.
        long s, t;
        egcd(nf.d, nf.e, s, t);
        Scalar base_p = comp.p.lc() / Scalar(nf.A);
        Scalar base_q = comp.q.lc() / Scalar(nf.B);
        Scalar C = base_p.pow(s) * base_q.pow(t);
        if (scalar_eq(C.pow(nf.d), base_p) && scalar_eq(C.pow(nf.e), base_q)) {
            comp.C_phi = C;
            comp.D_phi = D;
        }
    }
    return comp;
}

CheckList lemma2_consistency(const AssociatedNode& parent, const AssociatedNode& child,
                             const std::vector<PuiseuxSeries>& rootsP,
                             const std::vector<PuiseuxSeries>& rootsQ,
                             const DicriticalOptions& opts) {
    CheckList cl;
    if (!child.parent_c) return cl;
    const Scalar& c = *child.parent_c;
    auto close = [&](const Scalar& x, const Scalar& y) {
        if (x.is_exact() && y.is_exact()) return x.rational() == y.rational();
        return (x - y).mag_upper() <= opts.tol || scalar_eq(x, y);
    };

    // A_{i+1} = A_i pbar_i(c_i), both sides independently sourced.
    Scalar pbar(Rational(1));
    for (long k : parent.S) {
        bool in_S0 = std::find(child.parent_S0.begin(), child.parent_S0.end(), k) !=
                     child.parent_S0.end();
        if (in_S0) continue;
        Scalar aik = slot_coefficient(rootsP[size_t(k)], parent.prefix);
        for (long i = 0; i < rootsP[size_t(k)].multiplicity; ++i) pbar = pbar * (c - aik);
    }
    cl.add("A recursion", close(child.p.lc(), parent.p.lc() * pbar),
           "lc p_child = " + child.p.lc().str());
    Scalar qbar(Rational(1));
    for (long k : parent.T) {
        bool in_T0 = std::find(child.parent_T0.begin(), child.parent_T0.end(), k) !=
                     child.parent_T0.end();
        if (in_T0) continue;
        Scalar bik = slot_coefficient(rootsQ[size_t(k)], parent.prefix);
        for (long i = 0; i < rootsQ[size_t(k)].multiplicity; ++i) qbar = qbar * (c - bik);
    }
    cl.add("B recursion", close(child.q.lc(), parent.q.lc() * qbar),
           "lc q_child = " + child.q.lc().str());

    // Exponent recursions, exact rational arithmetic.
    Rational np = slot_ratio(parent.prefix), nc = slot_ratio(child.prefix);
    long s0 = weighted_count(child.parent_S0, rootsP);
    long t0 = weighted_count(child.parent_T0, rootsQ);
    cl.add("a recursion", child.a == parent.a + s0 * (np - nc),
           rat_str(child.a) + " vs " + rat_str(parent.a + s0 * (np - nc)));
    cl.add("b recursion", child.b == parent.b + t0 * (np - nc),
           rat_str(child.b) + " vs " + rat_str(parent.b + t0 * (np - nc)));

    // Degree equalities: deg p = #S = #S0(parent).
    auto counts = [&](long lhs, long rhs) {
        return "at " + child.prefix.str() + ": " + std::to_string(lhs) + " vs " +
               std::to_string(rhs);
    };
    cl.add("deg p = #S", child.p.degree() == weighted_count(child.S, rootsP),
           counts(child.p.degree(), weighted_count(child.S, rootsP)));
    cl.add("#S = #S0 parent", weighted_count(child.S, rootsP) == s0,
           counts(weighted_count(child.S, rootsP), s0));
    cl.add("deg q = #T", child.q.degree() == weighted_count(child.T, rootsQ),
           counts(child.q.degree(), weighted_count(child.T, rootsQ)));
    cl.add("#T = #T0 parent", weighted_count(child.T, rootsQ) == t0,
           counts(weighted_count(child.T, rootsQ), t0));
    return cl;
}

CheckList lemma3_consistency(const AssociatedNode& node, const Rational& jconst,
                             const DicriticalOptions& opts) {
    CheckList cl;
    if (!(node.a > 0 && node.b > 0)) return cl;
    long ai = node.a_int(), bi = node.b_int(), mi = node.m, ni = node.slot_n_over_m_int();
    XiPoly Ji = node.p.scaled(Scalar(Rational(ai))) * node.q.derivative() -
                node.p.derivative().scaled(Scalar(Rational(bi))) * node.q;
    if (ai + bi == 2 * mi - ni) {
        XiPoly expect = XiPoly::constant(Scalar(Rational(mi) * jconst));
        cl.add("J_i = m_i J on a+b = 2m-n", xipoly_agree(Ji, expect, opts.tol),
               "J_i = " + Ji.str());
    } else if (ai + bi > 2 * mi - ni) {
        cl.add("J_i = 0 on a+b > 2m-n", xipoly_agree(Ji, XiPoly(), opts.tol),
               "J_i = " + Ji.str());
    } else {
        cl.add("a+b >= 2m-n under constant Jacobian", false,
               "a+b = " + std::to_string(ai + bi) + " < " + std::to_string(2 * mi - ni));
    }
    bool ji_zero = xipoly_agree(Ji, XiPoly(), opts.tol);
    if (ji_zero) {
        // Common zero of p and q, and p^b proportional to q^a.
        RootOptions ropts = opts.roots;
        ropts.prec = opts.prec;
        bool common = false;
        for (const auto& r : roots_of(node.p, ropts))
            if (node.q.eval(r.value).is_zero()) common = true;
        if (node.p.degree() < 1 && node.q.degree() < 1) common = false;
        cl.add("J_i = 0 implies common zero", common || node.p.degree() < 1);
        XiPoly lhs = node.p.pow(bi) * XiPoly::constant(node.q.lc().pow(ai));
        XiPoly rhs = node.q.pow(ai) * XiPoly::constant(node.p.lc().pow(bi));
        cl.add("p^b = C q^a", xipoly_agree(lhs, rhs, opts.tol));
    }
    return cl;
}

Scalar param_membership_residual(const XiPoly& p, const XiPoly& q, const Scalar& u0,
                                 const Scalar& v0) {
    XiPoly f = p - XiPoly::constant(u0);
    XiPoly g = q - XiPoly::constant(v0);
    long df = f.degree(), dg = g.degree();
    if (df < 1 && dg < 1) {
        Scalar rf = df < 0 ? Scalar(0) : f.coeff(0);
        Scalar rg = dg < 0 ? Scalar(0) : g.coeff(0);
        return rf * rf + rg * rg;  // both constants: zero iff both vanish
    }
    if (df < 1) {
        Scalar c = df < 0 ? Scalar(0) : f.coeff(0);
        return c.pow(dg);
    }
    if (dg < 1) {
        Scalar c = dg < 0 ? Scalar(0) : g.coeff(0);
        return c.pow(df);
    }
    long n = df + dg;
    std::vector<std::vector<Scalar>> m(size_t(n), std::vector<Scalar>(size_t(n), Scalar(0)));
    for (long r = 0; r < dg; ++r)
        for (long j = 0; j <= df; ++j) m[size_t(r)][size_t(r + df - j)] = f.coeff(j);
    for (long r = 0; r < df; ++r)
        for (long j = 0; j <= dg; ++j) m[size_t(dg + r)][size_t(r + dg - j)] = g.coeff(j);
    return scalar_det(std::move(m));
}

namespace {

void search(const NormalForm& nf, AssociatedNode& node,
            const std::vector<PuiseuxSeries>& rootsP, const std::vector<PuiseuxSeries>& rootsQ,
            const DicriticalOptions& opts, long depth_cap, DicriticalResult& out,
            bool jconst_known, const Rational& jconst) {
    ++out.node_count;
    classify_node(node, opts);
    if (jconst_known) {
        CheckList l3 = lemma3_consistency(node, jconst, opts);
        out.lemma3.checked += l3.checked;
        for (auto& it : l3.items) out.lemma3.items.push_back(std::move(it));
    }
    if (node.status != NodeStatus::branchable) return;
    if (node.level >= depth_cap)
        throw resource_error("dicritical/depth-cap",
                             "depth cap exceeded at prefix " + node.prefix.str());
    node.children = expand_node(nf, node, rootsP, rootsQ, opts);
    if (node.children.empty()) {
        node.status = NodeStatus::dead;
        return;
    }

    // Conservation: children pick up disjoint root-index subsets of the parent.
    std::vector<long> seen;
    bool disjoint = true, subset = true;
    for (const auto& ch : node.children) {
        for (long k : ch.S) {
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) disjoint = false;
            if (std::find(node.S.begin(), node.S.end(), k) == node.S.end()) subset = false;
            seen.push_back(k);
        }
    }
    out.conservation.add("S partition at " + node.prefix.str(),
                         disjoint && subset && long(seen.size()) <= long(node.S.size()));

    for (auto& child : node.children) {
        CheckList l2 = lemma2_consistency(node, child, rootsP, rootsQ, opts);
        out.lemma2.checked += l2.checked;
        for (auto& it : l2.items) out.lemma2.items.push_back(std::move(it));
        search(nf, child, rootsP, rootsQ, opts, depth_cap, out, jconst_known, jconst);
    }
}

// Marks internal nodes on paths to dicritical leaves and runs the
// section-5 ratio checks on them (constant-Jacobian maps only).
bool assertion_pass(const AssociatedNode& node, const NormalForm& nf,
                    const std::vector<PuiseuxSeries>& rootsP,
                    const std::vector<PuiseuxSeries>& rootsQ, const DicriticalOptions& opts,
                    CheckList& out) {
    bool leads = node.status == NodeStatus::dicritical;
    for (const auto& ch : node.children)
        if (assertion_pass(ch, nf, rootsP, rootsQ, opts, out)) leads = true;
    if (!leads || node.status != NodeStatus::branchable) return leads;

    long sc = weighted_count(node.S, rootsP), tc = weighted_count(node.T, rootsQ);
    out.add("a/b = d/e at " + node.prefix.str(), node.a * nf.e == node.b * nf.d,
            rat_str(node.a) + ":" + rat_str(node.b));
    out.add("#S/#T = d/e at " + node.prefix.str(), sc * nf.e == tc * nf.d,
            std::to_string(sc) + ":" + std::to_string(tc));
    // pbar^e = qbar^d along the dicritical direction(s).
    for (const auto& ch : node.children) {
        if (!ch.parent_c) continue;
        XiPoly pbar = XiPoly::constant(Scalar(Rational(1)));
        for (long k : node.S) {
            if (std::find(ch.parent_S0.begin(), ch.parent_S0.end(), k) != ch.parent_S0.end())
                continue;
            Scalar aik = slot_coefficient(rootsP[size_t(k)], node.prefix);
            XiPoly lin({-aik, Scalar(Rational(1))});
            for (long i = 0; i < rootsP[size_t(k)].multiplicity; ++i) pbar = pbar * lin;
        }
        XiPoly qbar = XiPoly::constant(Scalar(Rational(1)));
        for (long k : node.T) {
            if (std::find(ch.parent_T0.begin(), ch.parent_T0.end(), k) != ch.parent_T0.end())
                continue;
            Scalar bik = slot_coefficient(rootsQ[size_t(k)], node.prefix);
            XiPoly lin({-bik, Scalar(Rational(1))});
            for (long i = 0; i < rootsQ[size_t(k)].multiplicity; ++i) qbar = qbar * lin;
        }
        out.add("pbar^e = qbar^d at " + node.prefix.str(),
                xipoly_agree(pbar.pow(nf.e), qbar.pow(nf.d), opts.tol));
    }
    return leads;
}

void collect_dicritical(const AssociatedNode& node, std::vector<const AssociatedNode*>& out) {
    if (node.status == NodeStatus::dicritical) out.push_back(&node);
    for (const auto& ch : node.children) collect_dicritical(ch, out);
}

bool image_included(const ComponentParam& inner, const ComponentParam& outer,
                    const DicriticalOptions& opts) {
    for (long s : {2L, 3L, 5L, 7L, 11L}) {
        Scalar xi{Rational(s)};
        Scalar res = param_membership_residual(outer.p, outer.q, inner.p.eval(xi),
                                               inner.q.eval(xi));
        if (res.is_exact()) {
            if (res.rational() != 0) return false;
        } else if (res.mag_upper() > opts.tol) {
            return false;
        }
    }
    return true;
}

} // namespace

DicriticalResult enumerate_dicritical(const NormalForm& nf, const DicriticalOptions& opts) {
    long depth_cap = opts.depth_cap > 0 ? opts.depth_cap : 4 * (nf.degP() + nf.degQ());
    long order = opts.initial_order > 0 ? opts.initial_order
                                        : std::max<long>(4, nf.degP() + nf.degQ());
    Rational jc;
    bool jconst_known = false;
    Poly J = jacobian(nf.map);
    if (J.is_constant() && !J.is_zero()) {
        jconst_known = true;
        jc = J.constant_value();
    }

    long prec = opts.prec;
    for (long attempt = 0;; ++attempt) {
        if (attempt >= opts.max_retries)
            throw resource_error("dicritical/retries", "root expansion never became deep enough");
        DicriticalOptions cur = opts;
        cur.prec = prec;
        PuiseuxOptions popts;
        popts.max_order = order;
        popts.roots = opts.roots;
        popts.roots.prec = prec;
        DicriticalResult out;
        try {
            out.rootsP = roots_at_infinity(nf.map.P, popts);
            out.rootsQ = roots_at_infinity(nf.map.Q, popts);
            out.expansion_order = order;
            out.tree = root_node(nf, out.rootsP, out.rootsQ, cur);
            search(nf, out.tree, out.rootsP, out.rootsQ, cur, depth_cap, out, jconst_known, jc);

            if (jconst_known)
                assertion_pass(out.tree, nf, out.rootsP, out.rootsQ, cur, out.assertion);

            std::vector<const AssociatedNode*> leaves;
            collect_dicritical(out.tree, leaves);
            std::vector<ComponentParam> comps;
            for (const AssociatedNode* leaf : leaves)
                comps.push_back(compute_f_phi(nf, leaf->prefix, jconst_known, cur));
            std::sort(comps.begin(), comps.end(),
                      [](const ComponentParam& a, const ComponentParam& b) {
                          return prefix_less(a.phi, b.phi);
                      });
            // Mutual-inclusion deduplication; the earliest (smallest) prefix wins.
            std::vector<bool> dup(comps.size(), false);
            for (size_t i = 0; i < comps.size(); ++i) {
                if (dup[i]) continue;
                for (size_t j = i + 1; j < comps.size(); ++j) {
                    if (dup[j]) continue;
                    if (image_included(comps[j], comps[i], cur) &&
                        image_included(comps[i], comps[j], cur))
                        dup[j] = true;
                }
            }
            for (size_t i = 0; i < comps.size(); ++i)
                if (!dup[i]) out.components.push_back(comps[i]);
            return out;
        } catch (const NeedDeeper& nd) {
            long need = long((nd.required.get_num().get_si() + nd.required.get_den().get_si() - 1) /
                             nd.required.get_den().get_si());
            order = std::max(order * 2, need + 2);
            continue;
        } catch (const precision_error&) {
            if (prec >= opts.prec * 16) throw;
            prec *= 2;
            continue;
        }
    }
}

} // namespace jelonek
