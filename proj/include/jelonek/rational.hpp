#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace jelonek {

// Exact arbitrary-precision rational. All polynomial-level arithmetic in the
// engine runs over this type; mpq_class keeps values canonical (reduced,
// positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Parses "123", "-4/7". Returns nullopt on malformed input.
std::optional<Rational> rat_from_string(const std::string& s);

std::string rat_to_string(const Rational& r);

// r^e with e possibly negative (requires r != 0 for e < 0).
Rational rat_pow(const Rational& r, long e);

// gcd on non-negative longs; gcd(0, n) = n.
long gcd_long(long a, long b);
long lcm_long(long a, long b);

} // namespace jelonek
