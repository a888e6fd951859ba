#include "jelonek/polymap.hpp"

#include "jelonek/errors.hpp"

namespace jelonek {

PolyMap make_map(Poly P, Poly Q) {
    if (P.is_zero() || Q.is_zero())
        throw input_error("map", "map component is the zero polynomial");
    return PolyMap{std::move(P), std::move(Q)};
}

Poly jacobian(const PolyMap& f) {
    return f.P.derivative("x") * f.Q.derivative("y") - f.P.derivative("y") * f.Q.derivative("x");
}

NormalForm normalize_monic(const PolyMap& f) {
    if (f.P.degree() < 1 || f.Q.degree() < 1)
        throw input_error("normalize", "map component of degree zero");
    if (jacobian(f).is_zero())
        throw input_error("normalize", "non-dominant map: identically zero Jacobian");

    Poly Pplus = f.P.leading_form();
    Poly Qplus = f.Q.leading_form();
    long lambda = 0;
    for (;; ++lambda) {
        std::map<std::string, Rational> at{{"x", Rational(lambda)}, {"y", Rational(1)}};
        if (Pplus.eval_all(at) != 0 && Qplus.eval_all(at) != 0) break;
        // Each leading form kills at most deg many directions.
        if (lambda > f.P.degree() + f.Q.degree() + 1)
            throw input_error("normalize", "no monic shear found");
    }

    NormalForm nf;
    nf.lambda = lambda;
    PolyMap sh = shear_map(Rational(lambda));
    nf.map = compose_map(f, sh);

    long dP = nf.map.P.degree(), dQ = nf.map.Q.degree();
    nf.A = nf.map.P.coeff_of("y", dP).constant_value();
    nf.B = nf.map.Q.coeff_of("y", dQ).constant_value();
    if (nf.map.P.degree_in("y") != dP || nf.map.Q.degree_in("y") != dQ || nf.A == 0 || nf.B == 0)
        throw input_error("normalize", "shear failed to reach monic form");
    nf.K = gcd_long(dP, dQ);
    nf.d = dP / nf.K;
    nf.e = dQ / nf.K;
    return nf;
}

LeadingRelation leading_relation_check(const NormalForm& nf) {
    LeadingRelation r;
    r.ratio = rat_pow(nf.B, nf.d) / rat_pow(nf.A, nf.e);
    if (nf.degP() <= 1 || nf.degQ() <= 1) return r;
    r.applicable = true;
    Poly lhs = nf.map.P.leading_form().pow(nf.e).scaled(rat_pow(nf.A, nf.e));
    Poly rhs = nf.map.Q.leading_form().pow(nf.d).scaled(rat_pow(nf.B, nf.d));
    r.holds = lhs == rhs;
    return r;
}

PolyMap compose_map(const PolyMap& f, const PolyMap& g) {
    std::map<std::string, Poly> subst{{"x", g.P}, {"y", g.Q}};
    return PolyMap{f.P.compose(subst), f.Q.compose(subst)};
}

PolyMap shear_map(const Rational& lambda) {
    auto vars = source_vars();
    Poly x = Poly::variable("x", vars);
    Poly y = Poly::variable("y", vars);
    return PolyMap{x + y.scaled(lambda), y};
}

} // namespace jelonek
