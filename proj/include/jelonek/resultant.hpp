#pragma once

#include <string>
#include <vector>

#include "jelonek/poly.hpp"
#include "jelonek/polymap.hpp"

namespace jelonek {

// Res_y(P - u, Q - v) collected by powers of x:
// R_0(u,v) x^N + R_1(u,v) x^{N-1} + ... + R_N(u,v),  R_0 != 0.
// Sign convention: Sylvester matrix with the deg_y Q rows of (P - u)
// coefficients first; the determinant is reported as computed.
struct ResultantData {
    long N = 0;
    std::vector<Poly> coeffs;  // coeffs[i] = R_i over vars (u, v); size N+1

    const Poly& R0() const { return coeffs.front(); }
};

struct ResultantOptions {
    enum class Algo { automatic, bareiss, interpolate };
    Algo algo = Algo::automatic;
    // Hard cap on intermediate term counts in the symbolic elimination.
    size_t term_cap = 2'000'000;
};

ResultantData resultant_in_y(const NormalForm& nf, const ResultantOptions& opts = {});

// Sylvester determinant fully specialized at rational (x, u, v); the
// independent spot-check oracle for the symbolic computation.
Rational sylvester_det_at(const NormalForm& nf, const Rational& x, const Rational& u,
                          const Rational& v);

// Res_y(P - u0, Q - v0) as a dense univariate polynomial in x
// (ascending powers). Degree equals N when (u0, v0) avoids R_0 = 0.
std::vector<Rational> resultant_x_at_value(const NormalForm& nf, const Rational& u0,
                                           const Rational& v0);

struct R0Extract {
    Poly R0;
    long N = 0;
    bool A_f_empty = false;  // true iff R_0 is a nonzero constant
};

R0Extract extract_R0(const ResultantData& rd);

// Corollary-style shape test of R_0 against C (A^e u^e - B^d v^d)^M plus
// terms of (d,e)-weighted degree below M d e.
struct R0ShapeReport {
    bool applicable = false;  // false for constant R_0 (trivially satisfied)
    Rational C;
    long M = 0;
    bool leading_ok = false;
    bool support_ok = false;
    std::vector<std::pair<long, long>> violating;  // (i, j) exponents of bad terms
    std::string diagnostic;
};

R0ShapeReport r0_shape_check(const Poly& R0, const NormalForm& nf);

// Res_y(F, G) of two (x, y)-polynomials whose leading y-coefficients are
// nonzero constants, returned as a polynomial in x (same variable list as F).
Poly resultant_y_of(const Poly& F, const Poly& G);

} // namespace jelonek
