#pragma once

#include <random>
#include <string>
#include <vector>

#include "jelonek/poly.hpp"
#include "jelonek/polymap.hpp"

namespace jelonek::testgen {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long height) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    return rat(num(rng), den(rng));
}

inline Poly random_poly(Rng& rng, const std::vector<std::string>& vars, long max_deg,
                        int terms, long height) {
    Poly p(vars);
    std::uniform_int_distribution<long> deg(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        Mono m{0, 0, 0, 0};
        long budget = deg(rng);
        for (size_t i = 0; i < vars.size() && budget > 0; ++i) {
            std::uniform_int_distribution<long> part(0, budget);
            long k = part(rng);
            m[i] = uint32_t(k);
            budget -= k;
        }
        p.add_term(m, random_rational(rng, height));
    }
    return p;
}

// Composition of at most `factors` triangular maps x -> x + h(y) (deg h <= 4)
// and invertible linear maps, with rational coefficients of height <= 10.
// Keeps the composed degree within `deg_cap` so the full pipeline stays at
// desk scale.
inline PolyMap random_tame_automorphism(Rng& rng, int factors = 4, long deg_cap = 8) {
    auto vars = source_vars();
    Poly x = Poly::variable("x", vars);
    Poly y = Poly::variable("y", vars);
    for (int attempt = 0; attempt < 200; ++attempt) {
        PolyMap f{x, y};
        std::uniform_int_distribution<int> nfac(1, factors);
        std::uniform_int_distribution<int> hdeg(1, 4);
        std::uniform_int_distribution<int> kind(0, 2);
        int n = nfac(rng);
        for (int i = 0; i < n; ++i) {
            PolyMap g{x, y};
            if (kind(rng) == 0) {
                // Invertible linear map.
                Rational a, b, c, d;
                do {
                    a = random_rational(rng, 10);
                    b = random_rational(rng, 10);
                    c = random_rational(rng, 10);
                    d = random_rational(rng, 10);
                } while (a * d - b * c == 0);
                g.P = x.scaled(a) + y.scaled(b);
                g.Q = x.scaled(c) + y.scaled(d);
            } else {
                // Triangular x -> x + h(y).
                int dh = hdeg(rng);
                Poly h(vars);
                for (int k = 0; k <= dh; ++k) {
                    Mono m{0, uint32_t(k), 0, 0};
                    h.add_term(m, random_rational(rng, 10));
                }
                // Force the stated degree so compositions vary.
                Mono top{0, uint32_t(dh), 0, 0};
                if (h.coeff_of("y", dh).is_zero()) h.add_term(top, Rational(1));
                g.P = x + h;
                g.Q = y;
                if (kind(rng) == 2) std::swap(g.P, g.Q);  // conjugate triangular
            }
            f = compose_map(g, f);
        }
        if (f.P.degree() >= 1 && f.Q.degree() >= 1 &&
            f.P.degree() * f.Q.degree() <= deg_cap * deg_cap &&
            f.P.degree() <= deg_cap && f.Q.degree() <= deg_cap)
            return f;
    }
    // Fallback: a fixed small automorphism.
    return PolyMap{x + y * y, y};
}

} // namespace jelonek::testgen
