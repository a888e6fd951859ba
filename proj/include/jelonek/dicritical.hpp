#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jelonek/polymap.hpp"
#include "jelonek/puiseux.hpp"
#include "jelonek/series.hpp"
#include "jelonek/xipoly.hpp"

namespace jelonek {

enum class NodeStatus { branchable, dicritical, dead };

// One level of an associated sequence: the parameter series prefix together
// with the leading data of P and Q along it and the root-index bookkeeping.
struct AssociatedNode {
    DicriticalPrefix prefix;
    long m = 1;             // mult of the prefix (= slot ambient)
    XiPoly p, q;            // leading coefficient polynomials
    Rational a, b;          // leading x-exponents a_i/m_i, b_i/m_i
    std::vector<long> S, T; // indices into the P-root / Q-root lists

    // Edge data (absent at the root): the branch coefficient chosen at the
    // parent and the parent's matching subsets S0/T0 for that coefficient.
    std::optional<Scalar> parent_c;
    std::vector<long> parent_S0, parent_T0;

    NodeStatus status = NodeStatus::dead;
    std::vector<Scalar> branch_roots;  // admissible when branchable

    long level = 0;
    std::vector<AssociatedNode> children;

    long a_int() const;  // a_i as the integer numerator over m
    long b_int() const;
    long slot_n_over_m_int() const;  // n_i as integer numerator over m
};

struct ComponentParam {
    DicriticalPrefix phi;
    XiPoly p, q;  // f_phi
    std::optional<Scalar> C_phi;
    std::optional<long> D_phi;
};

struct CheckItem {
    std::string what;
    bool ok = true;
    std::string detail;
};

struct CheckList {
    std::vector<CheckItem> items;
    long checked = 0;
    bool all_ok() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }
    void add(const std::string& what, bool ok, const std::string& detail = "") {
        ++checked;
        if (!ok || !detail.empty()) items.push_back({what, ok, detail});
    }
};

struct DicriticalOptions {
    long depth_cap = 0;  // 0 -> 4 (deg P + deg Q)
    long prec = 256;
    double tol = 0x1p-128;
    long initial_order = 0;  // 0 -> derived from degrees
    long max_retries = 12;
    RootOptions roots{};
};

struct DicriticalResult {
    std::vector<ComponentParam> components;
    AssociatedNode tree;
    std::vector<PuiseuxSeries> rootsP, rootsQ;
    long expansion_order = 0;
    long node_count = 0;
    CheckList lemma2;
    CheckList lemma3;
    CheckList assertion;     // section-5 ratio and proportionality checks
    CheckList conservation;  // root-index partition across siblings
};

// Level-0 node: prefix xi*x, S and T cover every root index.
AssociatedNode root_node(const NormalForm& nf, const std::vector<PuiseuxSeries>& rootsP,
                         const std::vector<PuiseuxSeries>& rootsQ,
                         const DicriticalOptions& opts);

// Fills status and admissible branch roots.
NodeStatus classify_node(AssociatedNode& node, const DicriticalOptions& opts);

// Children of a branchable node (empty when every direction dies).
std::vector<AssociatedNode> expand_node(const NormalForm& nf, const AssociatedNode& node,
                                        const std::vector<PuiseuxSeries>& rootsP,
                                        const std::vector<PuiseuxSeries>& rootsQ,
                                        const DicriticalOptions& opts);

// The value-side polynomial pair along a dicritical prefix, with the
// normal-form head data (C_phi, D_phi) extracted when the Jacobian is a
// nonzero constant and the head shape admits them.
ComponentParam compute_f_phi(const NormalForm& nf, const DicriticalPrefix& phi,
                             bool jacobian_constant, const DicriticalOptions& opts);

// Full search: tree, components (deduplicated, sorted by prefix), ledgers.
DicriticalResult enumerate_dicritical(const NormalForm& nf, const DicriticalOptions& opts);

// Recursion identities of the associated sequence across one edge.
CheckList lemma2_consistency(const AssociatedNode& parent, const AssociatedNode& child,
                             const std::vector<PuiseuxSeries>& rootsP,
                             const std::vector<PuiseuxSeries>& rootsQ,
                             const DicriticalOptions& opts);

// The J_i identity for a node with positive exponents under a constant
// Jacobian, including the proportionality check when J_i vanishes.
CheckList lemma3_consistency(const AssociatedNode& node, const Rational& jconst,
                             const DicriticalOptions& opts);

// |Res_xi(p - u0, q - v0)|: vanishes iff (u0, v0) lies on the image curve.
Scalar param_membership_residual(const XiPoly& p, const XiPoly& q, const Scalar& u0,
                                 const Scalar& v0);

} // namespace jelonek
