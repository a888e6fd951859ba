#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jelonek/rational.hpp"

namespace jelonek {

// Monomial exponent vector; only the first nvars slots of a Poly are used.
using Mono = std::array<uint32_t, 4>;

inline uint32_t mono_total(const Mono& m) { return m[0] + m[1] + m[2] + m[3]; }

// Degree-lex, descending: leading term first in the term map.
struct MonoDegLexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        uint32_t ta = mono_total(a), tb = mono_total(b);
        if (ta != tb) return ta > tb;
        return a > b;
    }
};

// Sparse exact polynomial over Q in up to four named variables. Terms are
// kept canonical: no zero coefficients, unique exponent vectors, deg-lex
// order. Equality is structural once variable lists agree.
class Poly {
public:
    using TermMap = std::map<Mono, Rational, MonoDegLexDesc>;

    Poly() : vars_{} {}
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(const Rational& c, std::vector<std::string> vars);
    static Poly variable(const std::string& name, std::vector<std::string> vars);
    static Poly monomial(const Rational& c, const Mono& m, std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (the coefficient of the all-zero monomial).
    Rational constant_value() const;

    long degree() const;                       // total degree; -1 for zero
    long degree_in(const std::string& var) const;
    long var_index(const std::string& var) const; // -1 if absent

    void add_term(const Mono& m, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    bool operator==(const Poly& o) const;

    Poly scaled(const Rational& c) const;
    Poly pow(long e) const;

    // Exact division; throws std::domain_error when o does not divide.
    Poly divide_exact(const Poly& o) const;

    Poly derivative(const std::string& var) const;

    // Terms of maximal total degree.
    Poly leading_form() const;

    // Coefficient of var^k, as a polynomial over the same variable list
    // (exponent of var forced to zero).
    Poly coeff_of(const std::string& var, long k) const;

    // Substitutes polynomials for a subset of variables. Substituted polys
    // must share this polynomial's variable list.
    Poly compose(const std::map<std::string, Poly>& subst) const;

    // Partial evaluation of one variable at a rational point.
    Poly eval_var(const std::string& var, const Rational& value) const;
    // Full evaluation; values must cover every variable actually present.
    Rational eval_all(const std::map<std::string, Rational>& values) const;

    // Same terms expressed over a wider variable list (superset, any order).
    Poly with_vars(const std::vector<std::string>& vars) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Parses the canonical grammar: +, -, *, ^, parentheses, integer or a/b
// rational literals, and the declared variable names. Throws input_error
// with a character position on malformed input.
Poly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

} // namespace jelonek
