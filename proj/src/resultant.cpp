#include "jelonek/resultant.hpp"

#include <stdexcept>

#include "jelonek/bareiss.hpp"
#include "jelonek/errors.hpp"

namespace jelonek {

namespace {

const std::vector<std::string> XUV{"x", "u", "v"};

// Sylvester matrix of (P - u, Q - v) as polynomials in y, entries in
// Q[x, u, v]. The deg_y Q block of P-coefficients comes first.
std::vector<std::vector<Poly>> sylvester_matrix(const NormalForm& nf) {
    long n = nf.degP(), m = nf.degQ();
    auto coeff_rows = [&](const Poly& F, long degy, const std::string& subtracted,
                          long rows) {
        std::vector<Poly> cs(size_t(degy) + 1);
        for (long j = 0; j <= degy; ++j)
            cs[size_t(j)] = F.coeff_of("y", j).with_vars(XUV);
        cs[0] -= Poly::variable(subtracted, XUV);
        auto block = std::vector<std::vector<Poly>>(size_t(rows));
        for (long r = 0; r < rows; ++r) {
            std::vector<Poly> row(size_t(n + m), Poly(XUV));
            for (long j = 0; j <= degy; ++j)
                row[size_t(r + degy - j)] = cs[size_t(j)];
            block[size_t(r)] = std::move(row);
        }
        return block;
    };
    auto top = coeff_rows(nf.map.P, n, "u", m);
    auto bottom = coeff_rows(nf.map.Q, m, "v", n);
    top.insert(top.end(), bottom.begin(), bottom.end());
    return top;
}

Poly symbolic_det(std::vector<std::vector<Poly>> m, size_t term_cap) {
    Poly one = Poly::constant(Rational(1), XUV);
    std::function<void(const Poly&)> inspect = [term_cap](const Poly& p) {
        if (p.term_count() > term_cap)
            throw resource_error("resultant/term-cap",
                                 "intermediate term count exceeds configured cap");
    };
    return bareiss_determinant<Poly>(
        std::move(m), one, [](const Poly& p) { return p.is_zero(); },
        [](const Poly& a, const Poly& b) { return a.divide_exact(b); }, inspect);
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
    return bareiss_determinant<Rational>(
        std::move(m), Rational(1), [](const Rational& r) { return r == 0; },
        [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

// Newton interpolation at integer nodes 0..n; returns dense coefficients,
// ascending powers. Exact for polynomials of degree <= n.
std::vector<Rational> interp_integer_nodes(std::vector<Rational> vals) {
    const size_t n1 = vals.size();
    for (size_t k = 1; k < n1; ++k)
        for (size_t i = n1 - 1; i >= k; --i) {
            vals[i] = (vals[i] - vals[i - 1]) / Rational(long(k));
            if (i == k) break;
        }
    std::vector<Rational> poly{vals[n1 - 1]};
    for (size_t step = 1; step < n1; ++step) {
        long node = long(n1 - 1 - step);
        // poly = poly * (X - node) + dd[node]
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * node;
        }
        next[0] += vals[size_t(node)];
        poly = std::move(next);
    }
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    return poly;
}

Poly interpolated_det(const std::vector<std::vector<Poly>>& matrix, long n, long m) {
    const long Bx = n * m, Bu = m, Bv = n;
    // Grid of scalar determinants, x specialized outermost so entries shrink
    // to at most two (u, v) terms before the inner loops.
    std::vector<std::vector<std::vector<Rational>>> grid(
        size_t(Bx + 1), std::vector<std::vector<Rational>>(size_t(Bu + 1),
                                                           std::vector<Rational>(size_t(Bv + 1))));
    for (long t = 0; t <= Bx; ++t) {
        std::vector<std::vector<Poly>> mx(matrix.size());
        for (size_t i = 0; i < matrix.size(); ++i) {
            mx[i].reserve(matrix[i].size());
            for (const auto& e : matrix[i]) mx[i].push_back(e.eval_var("x", Rational(t)));
        }
        for (long s = 0; s <= Bu; ++s) {
            std::vector<std::vector<Poly>> mxu(mx.size());
            for (size_t i = 0; i < mx.size(); ++i) {
                mxu[i].reserve(mx[i].size());
                for (const auto& e : mx[i]) mxu[i].push_back(e.eval_var("u", Rational(s)));
            }
            for (long r = 0; r <= Bv; ++r) {
                std::vector<std::vector<Rational>> sm(mxu.size());
                for (size_t i = 0; i < mxu.size(); ++i) {
                    sm[i].reserve(mxu[i].size());
                    for (const auto& e : mxu[i])
                        sm[i].push_back(e.eval_var("v", Rational(r)).constant_value());
                }
                grid[size_t(t)][size_t(s)][size_t(r)] = rational_det(std::move(sm));
            }
        }
    }
    std::vector<std::vector<std::vector<Rational>>> xcoef(
        size_t(Bu + 1), std::vector<std::vector<Rational>>(size_t(Bv + 1)));
    for (long s = 0; s <= Bu; ++s)
        for (long r = 0; r <= Bv; ++r) {
            std::vector<Rational> vals(size_t(Bx) + 1);
            for (long t = 0; t <= Bx; ++t) vals[size_t(t)] = grid[size_t(t)][size_t(s)][size_t(r)];
            xcoef[size_t(s)][size_t(r)] = interp_integer_nodes(std::move(vals));
        }
    Poly det(XUV);
    long maxx = 0;
    for (long s = 0; s <= Bu; ++s)
        for (long r = 0; r <= Bv; ++r)
            maxx = std::max(maxx, long(xcoef[size_t(s)][size_t(r)].size()) - 1);
    for (long i = 0; i <= maxx; ++i) {
        // Values of the x^i coefficient on the (u, v) grid.
        std::vector<std::vector<Rational>> ucoef(size_t(Bu + 1));
        for (long s = 0; s <= Bu; ++s) {
            std::vector<Rational> vvals(size_t(Bv + 1), Rational(0));
            for (long r = 0; r <= Bv; ++r) {
                const auto& xc = xcoef[size_t(s)][size_t(r)];
                if (long(xc.size()) > i) vvals[size_t(r)] = xc[size_t(i)];
            }
            ucoef[size_t(s)] = interp_integer_nodes(std::move(vvals));
        }
        for (long k = 0; k <= Bv; ++k) {
            std::vector<Rational> uvals(size_t(Bu + 1), Rational(0));
            for (long s = 0; s <= Bu; ++s)
                if (long(ucoef[size_t(s)].size()) > k) uvals[size_t(s)] = ucoef[size_t(s)][size_t(k)];
            auto up = interp_integer_nodes(std::move(uvals));
            for (size_t j = 0; j < up.size(); ++j)
                det.add_term(Mono{uint32_t(i), uint32_t(j), uint32_t(k), 0}, up[j]);
        }
    }
    return det;
}

} // namespace

Rational sylvester_det_at(const NormalForm& nf, const Rational& x, const Rational& u,
                          const Rational& v) {
    auto matrix = sylvester_matrix(nf);
    std::vector<std::vector<Rational>> sm(matrix.size());
    for (size_t i = 0; i < matrix.size(); ++i) {
        sm[i].reserve(matrix[i].size());
        for (const auto& e : matrix[i])
            sm[i].push_back(e.eval_all({{"x", x}, {"u", u}, {"v", v}}));
    }
    return rational_det(std::move(sm));
}

ResultantData resultant_in_y(const NormalForm& nf, const ResultantOptions& opts) {
    const long n = nf.degP(), m = nf.degQ();
    auto matrix = sylvester_matrix(nf);

    bool symbolic;
    switch (opts.algo) {
        case ResultantOptions::Algo::bareiss: symbolic = true; break;
        case ResultantOptions::Algo::interpolate: symbolic = false; break;
        default: symbolic = n * m <= 12; break;
    }
    Poly det = symbolic ? symbolic_det(matrix, opts.term_cap)
                        : interpolated_det(matrix, n, m);
    if (det.is_zero())
        throw input_error("resultant", "vanishing resultant: components share a factor");

    long N = det.degree_in("x");
    if (N > n * m)
        throw std::logic_error("resultant degree exceeds the Bezout bound");

    // Independent spot check against scalar elimination at fixed points.
    for (auto [xs, us, vs] : {std::array<Rational, 3>{rat(7, 3), rat(5, 2), rat(-3, 4)},
                              std::array<Rational, 3>{rat(-2, 1), rat(1, 3), rat(9, 5)}}) {
        Rational direct = sylvester_det_at(nf, xs, us, vs);
        Rational via = det.eval_all({{"x", xs}, {"u", us}, {"v", vs}});
        if (direct != via)
            throw std::logic_error("resultant specialization mismatch");
    }

    ResultantData rd;
    rd.N = N;
    rd.coeffs.reserve(size_t(N) + 1);
    for (long i = 0; i <= N; ++i)
        rd.coeffs.push_back(det.coeff_of("x", N - i).with_vars(value_vars()));
    if (rd.coeffs.front().is_zero())
        throw std::logic_error("leading resultant coefficient vanished");
    return rd;
}

std::vector<Rational> resultant_x_at_value(const NormalForm& nf, const Rational& u0,
                                           const Rational& v0) {
    const long n = nf.degP(), m = nf.degQ();
    auto matrix = sylvester_matrix(nf);
    for (auto& row : matrix)
        for (auto& e : row) e = e.eval_var("u", u0).eval_var("v", v0);
    const long Bx = n * m;
    std::vector<Rational> vals;
    vals.reserve(size_t(Bx) + 1);
    for (long t = 0; t <= Bx; ++t) {
        std::vector<std::vector<Rational>> sm(matrix.size());
        for (size_t i = 0; i < matrix.size(); ++i) {
            sm[i].reserve(matrix[i].size());
            for (const auto& e : matrix[i]) sm[i].push_back(e.eval_var("x", Rational(t)).constant_value());
        }
        vals.push_back(rational_det(std::move(sm)));
    }
    return interp_integer_nodes(std::move(vals));
}

Poly resultant_y_of(const Poly& F, const Poly& G) {
    const long n = F.degree_in("y"), m = G.degree_in("y");
    if (n < 0 || m < 0) throw std::domain_error("resultant of a zero polynomial");
    if (n == 0 || m == 0) {
        // Res(f, g) with one side free of y: power of the constant side.
        const Poly& cst = (n == 0) ? F : G;
        long other = (n == 0) ? m : n;
        Poly acc = Poly::constant(Rational(1), F.vars());
        for (long i = 0; i < other; ++i) acc = acc * cst;
        return acc;
    }
    if (!F.coeff_of("y", n).is_constant() || !G.coeff_of("y", m).is_constant())
        throw std::domain_error("resultant_y_of expects constant leading y-coefficients");

    auto rows_of = [&](const Poly& H, long degy, long count) {
        std::vector<Poly> cs(size_t(degy) + 1);
        for (long j = 0; j <= degy; ++j) cs[size_t(j)] = H.coeff_of("y", j);
        std::vector<std::vector<Poly>> block(size_t(count),
                                             std::vector<Poly>(size_t(n + m), Poly(F.vars())));
        for (long r = 0; r < count; ++r)
            for (long j = 0; j <= degy; ++j) block[size_t(r)][size_t(r + degy - j)] = cs[size_t(j)];
        return block;
    };
    auto matrix = rows_of(F, n, m);
    auto bottom = rows_of(G, m, n);
    matrix.insert(matrix.end(), bottom.begin(), bottom.end());

    long Bx = m * std::max<long>(F.degree_in("x"), 0) + n * std::max<long>(G.degree_in("x"), 0);
    std::vector<Rational> vals;
    vals.reserve(size_t(Bx) + 1);
    for (long t = 0; t <= Bx; ++t) {
        std::vector<std::vector<Rational>> sm(matrix.size());
        for (size_t i = 0; i < matrix.size(); ++i) {
            sm[i].reserve(matrix[i].size());
            for (const auto& e : matrix[i])
                sm[i].push_back(e.eval_var("x", Rational(t)).constant_value());
        }
        vals.push_back(rational_det(std::move(sm)));
    }
    auto coeffs = interp_integer_nodes(std::move(vals));
    Poly out(F.vars());
    long ix = out.var_index("x");
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Mono mo{0, 0, 0, 0};
        mo[size_t(ix)] = uint32_t(i);
        out.add_term(mo, coeffs[i]);
    }
    return out;
}

R0Extract extract_R0(const ResultantData& rd) {
    R0Extract out;
    out.R0 = rd.R0();
    out.N = rd.N;
    out.A_f_empty = out.R0.is_constant() && !out.R0.is_zero();
    return out;
}

R0ShapeReport r0_shape_check(const Poly& R0, const NormalForm& nf) {
    R0ShapeReport rep;
    if (R0.is_constant()) {
        rep.applicable = false;
        rep.M = 0;
        rep.leading_ok = rep.support_ok = true;
        rep.C = R0.constant_value();
        return rep;
    }
    rep.applicable = true;
    const long d = nf.d, e = nf.e;
    long iu = R0.var_index("u"), iv = R0.var_index("v");
    if (iu < 0 || iv < 0) throw std::domain_error("r0_shape_check expects (u, v) variables");

    long W = 0;
    for (const auto& [mono, c] : R0.terms())
        W = std::max(W, long(mono[size_t(iu)]) * d + long(mono[size_t(iv)]) * e);
    if (W % (d * e) != 0) {
        rep.M = -1;
        rep.diagnostic = "weighted degree " + std::to_string(W) +
                         " is not divisible by d*e = " + std::to_string(d * e);
        for (const auto& [mono, c] : R0.terms())
            if (long(mono[size_t(iu)]) * d + long(mono[size_t(iv)]) * e == W)
                rep.violating.emplace_back(long(mono[size_t(iu)]), long(mono[size_t(iv)]));
        return rep;
    }
    rep.M = W / (d * e);

    // C from the u^{eM} coefficient; the binomial power always carries it.
    Mono key{0, 0, 0, 0};
    key[size_t(iu)] = uint32_t(e * rep.M);
    auto it = R0.terms().find(key);
    if (it == R0.terms().end()) {
        rep.diagnostic = "leading part lacks the u^(e*M) term";
        for (const auto& [mono, c] : R0.terms())
            if (long(mono[size_t(iu)]) * d + long(mono[size_t(iv)]) * e == W)
                rep.violating.emplace_back(long(mono[size_t(iu)]), long(mono[size_t(iv)]));
        return rep;
    }
    rep.C = it->second / rat_pow(nf.A, e * rep.M);

    auto uv = R0.vars();
    Poly binom = Poly::monomial(rat_pow(nf.A, e), [&] { Mono mm{0,0,0,0}; mm[size_t(iu)] = uint32_t(e); return mm; }(), uv) -
                 Poly::monomial(rat_pow(nf.B, d), [&] { Mono mm{0,0,0,0}; mm[size_t(iv)] = uint32_t(d); return mm; }(), uv);
    Poly delta = R0 - binom.pow(rep.M).scaled(rep.C);

    bool bad_at_top = false;
    for (const auto& [mono, c] : delta.terms()) {
        long w = long(mono[size_t(iu)]) * d + long(mono[size_t(iv)]) * e;
        if (w >= rep.M * d * e) {
            rep.violating.emplace_back(long(mono[size_t(iu)]), long(mono[size_t(iv)]));
            bad_at_top = true;
        }
    }
    rep.leading_ok = !bad_at_top;
    rep.support_ok = rep.violating.empty();
    if (!rep.leading_ok)
        rep.diagnostic = "terms of weighted degree >= M*d*e outside C*(A^e u^e - B^d v^d)^M";
    return rep;
}

} // namespace jelonek
