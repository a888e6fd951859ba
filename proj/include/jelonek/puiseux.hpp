#pragma once

#include <optional>
#include <vector>

#include "jelonek/poly.hpp"
#include "jelonek/roots.hpp"
#include "jelonek/series.hpp"

namespace jelonek {

struct PuiseuxOptions {
    // Expansion depth in x-exponent units: every branch is resolved through
    // terms x^{1-k/m} with k/m <= max_order.
    long max_order = 16;
    RootOptions roots{};
    long node_cap = 50'000;
};

// Newton-Puiseux roots at infinity of F (monic in y, deg_y F = deg F >= 1):
// deg F series counted with multiplicity, conjugates listed separately.
// Throws resource_error when max_order cannot separate branches of a
// squarefree input, precision_error on unresolved root clusters.
std::vector<PuiseuxSeries> roots_at_infinity(const Poly& F, const PuiseuxOptions& opts);

// Exact expansion of F along a parameter prefix; terms with x-exponent
// below -trunc are withheld (resource_error if that hides everything).
ParamSeries substitute_param(const Poly& F, const DicriticalPrefix& prefix,
                             long trunc = 1'000'000);

struct FactorizationReport {
    bool ok = false;
    double residual = 0.0;
    std::string first_mismatch;
};

// Multiplies A * prod (y - u_i(x)) back out and compares with F on every
// term above the joint truncation frontier.
FactorizationReport factorization_check(const Poly& F, const std::vector<PuiseuxSeries>& roots,
                                        const Rational& A, double tol, long prec);

// Leading x-exponent of F(x, s(x)) above the series' truncation frontier;
// nullopt when the residue vanishes there. Drives the defect-decay property.
std::optional<Rational> substitution_defect(const Poly& F, const PuiseuxSeries& s, long prec);

} // namespace jelonek
