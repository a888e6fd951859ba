#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jelonek/dicritical.hpp"
#include "jelonek/polymap.hpp"
#include "jelonek/resultant.hpp"

namespace jelonek {

// The Jacobian constant when J(P, Q) is a nonzero constant; absent otherwise.
std::optional<Rational> jacobian_constancy(const PolyMap& f);

struct Theorem1Result {
    bool applicable = false;  // nonzero constant Jacobian
    bool vacuous = false;     // no components to check
    struct PerComponent {
        bool shape_ok = false;
        std::optional<Scalar> C_phi;
        long m = 0;
        std::string detail;
    };
    std::vector<PerComponent> components;
    bool all_ok() const {
        for (const auto& c : components)
            if (!c.shape_ok) return false;
        return true;
    }
};

// Heads of each parametrization against (A C^d, deg m d) / (B C^e, deg m e).
Theorem1Result verify_theorem1(const NormalForm& nf, const std::vector<ComponentParam>& comps,
                               double tol);

struct Cor2Result {
    bool applicable = false;  // components present
    bool one_point_at_infinity = false;
    struct PerComponent {
        bool special = false;           // a constant coordinate: axis-parallel line
        std::string direction;          // projective point at infinity
        std::optional<bool> relation_head;     // c^e B^d = A^e (from the head shape)
        std::optional<bool> relation_radical;  // c^d = B^d/A^e (compared at e-th powers)
    };
    std::vector<PerComponent> components;
};

Cor2Result verify_cor2(const NormalForm& nf, const std::vector<ComponentParam>& comps);

// R_0 evaluated along one parametrization.
struct ResidualInfo {
    double magnitude = 0.0;
    bool exact_zero = false;
};
ResidualInfo cross_residual(const Poly& R0, const ComponentParam& comp);

struct CrossValidation {
    struct PerComponent {
        bool ok = false;
        double residual = 0.0;
        bool exact_zero = false;
    };
    std::vector<PerComponent> components;
    bool converse_ok = true;     // sampled R_0 roots land on some component
    long converse_checked = 0;
    bool all_ok() const {
        if (!converse_ok) return false;
        for (const auto& c : components)
            if (!c.ok) return false;
        return true;
    }
};

CrossValidation cross_validate(const Poly& R0, const std::vector<ComponentParam>& comps,
                               double tol, long prec, std::mt19937_64& rng);

// Number of complex roots, with multiplicity, of Res_y(P-u0, Q-v0) in x,
// counted by certified numeric isolation. nullopt when the specialization is
// degenerate (leading coefficient vanished: the value sits on A_f).
std::optional<long> fiber_count_at(const NormalForm& nf, const Rational& u0, const Rational& v0,
                                   long expected_N, long prec);

// Generic-value sampler around fiber_count_at; integer coordinates are drawn
// uniformly from [-10^6, 10^6] and degenerate draws are rejected.
long fiber_count_generic(const NormalForm& nf, long expected_N, long prec, std::mt19937_64& rng,
                         int max_attempts = 32);

} // namespace jelonek
