#pragma once

#include <vector>

#include "jelonek/ball.hpp"
#include "jelonek/scalar.hpp"
#include "jelonek/xipoly.hpp"

namespace jelonek {

// Dense univariate polynomials over Q, ascending powers, exact arithmetic.
// Small helper layer for squarefree decomposition and deflation.
namespace rupoly {

void trim(std::vector<Rational>& f);
long degree(const std::vector<Rational>& f);
std::vector<Rational> derivative(const std::vector<Rational>& f);
Rational eval(const std::vector<Rational>& f, const Rational& at);
// Quotient and remainder over Q.
std::pair<std::vector<Rational>, std::vector<Rational>> divmod(std::vector<Rational> a,
                                                               const std::vector<Rational>& b);
// Monic gcd.
std::vector<Rational> gcd(std::vector<Rational> a, std::vector<Rational> b);
// Yun decomposition: pairwise-coprime monic squarefree factors with their
// multiplicities; the constant content is dropped.
std::vector<std::pair<std::vector<Rational>, long>> squarefree_decompose(
    std::vector<Rational> f);

} // namespace rupoly

struct ScalarRoot {
    Scalar value;
    long multiplicity = 1;
};

struct RootOptions {
    long prec = 256;
    // Clusters of approximations that certify only as a group are accepted as
    // one multiple root while their joint radius stays below this; otherwise
    // the engine refuses and asks for more precision.
    double cluster_accept = 0x1p-64;
    int max_iterations = 400;
    // Skip rational-root recognition: every root comes back as a ball at the
    // working precision (the engine's "ball" mode).
    bool force_ball = false;
};

// All complex roots, with multiplicity, of an exact rational polynomial.
// Rational roots come back exact (recognized from certified approximations
// and re-verified by exact evaluation); the rest are certified balls.
std::vector<ScalarRoot> roots_of_exact(std::vector<Rational> f, const RootOptions& opts);

// All complex roots of a ball-coefficient polynomial (degree taken from the
// trimmed input). Multiple roots surface as certified clusters.
std::vector<ScalarRoot> roots_of_ball(const std::vector<Ball>& f, const RootOptions& opts);

// Dispatch on the coefficient mode of f.
std::vector<ScalarRoot> roots_of(const XiPoly& f, const RootOptions& opts);

} // namespace jelonek
