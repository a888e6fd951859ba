#pragma once

#include <string>
#include <vector>

#include "jelonek/poly.hpp"

namespace jelonek {

inline std::vector<std::string> source_vars() { return {"x", "y"}; }
inline std::vector<std::string> value_vars() { return {"u", "v"}; }

// A polynomial map (P, Q) of the plane; both components over vars (x, y),
// neither identically zero.
struct PolyMap {
    Poly P, Q;
};

PolyMap make_map(Poly P, Poly Q);

// P_x Q_y - P_y Q_x, exact.
Poly jacobian(const PolyMap& f);

// The map rewritten so that both components are monic in y with
// deg_y = total degree, via the shear x -> x + lambda*y, plus the extracted
// head data: P has leading coefficient A and degree K*d, Q has B and K*e,
// gcd(d, e) = 1.
struct NormalForm {
    PolyMap map;
    long lambda = 0;
    Rational A, B;
    long K = 1, d = 1, e = 1;

    long degP() const { return K * d; }
    long degQ() const { return K * e; }
};

// Smallest shear parameter lambda in {0, 1, 2, ...} makes both leading forms
// nonzero at (lambda, 1). Throws input_error for non-dominant maps or
// degree-zero components.
NormalForm normalize_monic(const PolyMap& f);

struct LeadingRelation {
    bool applicable = false;  // requires deg P > 1 and deg Q > 1
    bool holds = false;
    Rational ratio;           // B^d / A^e
};

// Tests the leading-form identity  P+^e == (B^d/A^e) Q+^d  exactly.
LeadingRelation leading_relation_check(const NormalForm& nf);

// Right-composition f o g (source-coordinate change).
PolyMap compose_map(const PolyMap& f, const PolyMap& g);

// The shear (x + lambda*y, y) as a map.
PolyMap shear_map(const Rational& lambda);

} // namespace jelonek
