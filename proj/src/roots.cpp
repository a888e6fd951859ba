#include "jelonek/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdlib>
#include <cstdio>

#include "jelonek/errors.hpp"

namespace jelonek {

namespace rupoly {

void trim(std::vector<Rational>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const std::vector<Rational>& f) { return long(f.size()) - 1; }

std::vector<Rational> derivative(const std::vector<Rational>& f) {
    std::vector<Rational> d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * long(i));
    trim(d);
    return d;
}

Rational eval(const std::vector<Rational>& f, const Rational& at) {
    Rational acc(0);
    for (size_t i = f.size(); i-- > 0;) acc = acc * at + f[i];
    return acc;
}

std::pair<std::vector<Rational>, std::vector<Rational>> divmod(
    std::vector<Rational> a, const std::vector<Rational>& b) {
    if (b.empty()) throw std::domain_error("univariate division by zero");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();  // the leading term cancels exactly
        trim(a);
        if (a.empty()) break;
    }
    trim(q);
    return {q, a};
}

std::vector<Rational> gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

std::vector<std::pair<std::vector<Rational>, long>> squarefree_decompose(
    std::vector<Rational> f) {
    trim(f);
    std::vector<std::pair<std::vector<Rational>, long>> out;
    if (degree(f) < 1) return out;
    auto fp = derivative(f);
    auto u = gcd(f, fp);
    auto v = divmod(f, u).first;
    auto w = divmod(fp, u).first;
    long i = 1;
    while (degree(v) > 0) {
        auto z = w;
        auto vp = derivative(v);
        // z = w - v'
        if (z.size() < vp.size()) z.resize(vp.size(), Rational(0));
        for (size_t k = 0; k < vp.size(); ++k) z[k] -= vp[k];
        trim(z);
        auto g = gcd(v, z);
        if (degree(g) > 0) out.emplace_back(g, i);
        v = divmod(v, g).first;
        w = divmod(z, g).first;
        ++i;
        if (i > 512) throw std::logic_error("squarefree decomposition runaway");
    }
    return out;
}

} // namespace rupoly

// ---------------------------------------------------------------------------
// Aberth-Ehrlich iteration on mpfr complex midpoints with Weierstrass-disk
// certification; coefficient radii feed the certification bound.

namespace {

struct Cplx {
    BigFloat re, im;

    Cplx() = default;
    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
};

Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cplx operator/(const Cplx& a, const Cplx& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

double mag_upper(const Cplx& a) { return a.re.to_double_upper_abs() + a.im.to_double_upper_abs(); }

double dist_lower(const Cplx& a, const Cplx& b) {
    double dr = std::abs((a.re - b.re).to_double());
    double di = std::abs((a.im - b.im).to_double());
    double m = std::max(dr, di);
    return m * (1.0 - 1e-13);
}

Ball to_ball(const Cplx& z, double rad) { return Ball(z.re, z.im, rad); }

// Horner evaluation of a ball-coefficient polynomial at an exact complex
// point; the result radius certifies |p(z) - mid|.
Ball ball_eval(const std::vector<Ball>& f, const Cplx& z) {
    Ball zb = to_ball(z, 0.0);
    Ball acc = f.back();
    for (size_t i = f.size() - 1; i-- > 0;) acc = acc * zb + f[i];
    return acc;
}

struct CertifiedRoot {
    Cplx z;
    double rad;
    long multiplicity;
};

std::vector<CertifiedRoot> aberth(const std::vector<Ball>& f, const RootOptions& opts) {
    const long n = long(f.size()) - 1;
    const long prec = opts.prec;
    std::vector<CertifiedRoot> out;
    if (n <= 0) return out;

    double an_lo = f.back().mag_lower();
    if (an_lo <= 0.0)
        throw precision_error("leading coefficient of root target is not certainly nonzero");

    if (n == 1) {
        Ball r = -(f[0] / f[1]);
        out.push_back({Cplx(r.re, r.im), r.rad, 1});
        return out;
    }

    // Cauchy bound for the initial circle.
    double radius = 0.0;
    for (size_t i = 0; i + 1 < f.size(); ++i)
        radius = std::max(radius, f[i].mag_upper() / an_lo);
    radius = 1.0 + radius;

    BigFloat pi(prec);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    auto z = std::vector<Cplx>(size_t(n));
    for (long k = 0; k < n; ++k) {
        BigFloat theta = pi * BigFloat::from_double((2.0 * double(k) + 0.5) / double(n) + 0.137, prec);
        BigFloat c(prec), s(prec);
        mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
        BigFloat R = BigFloat::from_double(radius, prec);
        z[size_t(k)] = Cplx(R * c, R * s);
    }

    std::vector<Ball> df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * Scalar(long(i)).to_ball(prec));

    const double stop = std::ldexp(1.0, int(-(prec - 16)));
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        double worst = 0.0;
        for (long k = 0; k < n; ++k) {
            Ball pv = ball_eval(f, z[size_t(k)]);
            Ball dv = ball_eval(df, z[size_t(k)]);
            Cplx p(pv.re, pv.im), d(dv.re, dv.im);
            if (mag_upper(p) == 0.0) continue;
            if (std::abs(d.re.to_double()) == 0.0 && std::abs(d.im.to_double()) == 0.0) {
                // Nudge off a critical point.
                z[size_t(k)].re = z[size_t(k)].re + BigFloat::from_double(1e-3, prec);
                worst = 1.0;
                continue;
            }
            Cplx w = p / d;
            Cplx s{BigFloat(prec), BigFloat(prec)};
            for (long j = 0; j < n; ++j) {
                if (j == k) continue;
                Cplx diff = z[size_t(k)] - z[size_t(j)];
                BigFloat den = diff.re * diff.re + diff.im * diff.im;
                if (den.is_zero()) {
                    z[size_t(j)].re = z[size_t(j)].re + BigFloat::from_double(1e-4 * (j + 1), prec);
                    diff = z[size_t(k)] - z[size_t(j)];
                    den = diff.re * diff.re + diff.im * diff.im;
                }
                s = s + Cplx(diff.re / den, -(diff.im / den));
            }
            Cplx onec{BigFloat::from_rational(Rational(1), prec), BigFloat(prec)};
            Cplx corr = w / (onec - w * s);
            z[size_t(k)] = z[size_t(k)] - corr;
            double scale = std::max(1.0, mag_upper(z[size_t(k)]));
            worst = std::max(worst, mag_upper(corr) / scale);
        }
        if (worst <= stop) break;
    }

    // Weierstrass-style inclusion disks: |W_k| = |p(z_k)| / (|a_n| prod |z_k - z_j|).
    auto rad = std::vector<double>(size_t(n), 0.0);
    auto coincident = std::vector<bool>(size_t(n), false);
    for (long k = 0; k < n; ++k) {
        double num = ball_eval(f, z[size_t(k)]).mag_upper();
        double den = an_lo;
        for (long j = 0; j < n; ++j) {
            if (j == k) continue;
            double d = dist_lower(z[size_t(k)], z[size_t(j)]);
            if (d <= 0.0) { coincident[size_t(k)] = true; break; }
            den *= d;
        }
        rad[size_t(k)] = coincident[size_t(k)] ? 1.0 : double(n) * num / den * (1.0 + 1e-12);
        if (!std::isfinite(rad[size_t(k)])) rad[size_t(k)] = 1.0;
    }

    // Merge overlapping disks into clusters.
    auto parent = std::vector<long>(size_t(n));
    for (long k = 0; k < n; ++k) parent[size_t(k)] = k;
    std::function<long(long)> find = [&](long a) {
        while (parent[size_t(a)] != a) a = parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
        return a;
    };
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            double d = dist_lower(z[size_t(i)], z[size_t(j)]);
            if (coincident[size_t(i)] || coincident[size_t(j)] ||
                d <= (rad[size_t(i)] + rad[size_t(j)]) * 1.0001)
                parent[size_t(find(i))] = find(j);
        }

    auto clusters = std::vector<std::vector<long>>(size_t(n));
    for (long k = 0; k < n; ++k) clusters[size_t(find(k))].push_back(k);
    for (const auto& members : clusters) {
        if (members.empty()) continue;
        long m = long(members.size());
        BigFloat cr(prec), ci(prec);
        for (long k : members) {
            cr = cr + z[size_t(k)].re;
            ci = ci + z[size_t(k)].im;
        }
        BigFloat inv = BigFloat::from_rational(rat(1, m), prec);
        Cplx center(cr * inv, ci * inv);
        double crad = 0.0;
        for (long k : members) {
            Cplx d = z[size_t(k)] - center;
            crad = std::max(crad, mag_upper(d) + rad[size_t(k)]);
        }
        double scale = std::max(1.0, mag_upper(center));
        if (m > 1) {
            // Weierstrass disks degrade when iterates collapse onto a multiple
            // root; certify the cluster with a Pellet test on the Taylor shift
            // instead: exactly m roots lie inside radius R when |tau_m| R^m
            // dominates the sum of the other terms.
            std::vector<Ball> tau(f);
            Ball cb = to_ball(center, 0.0);
            for (long i = 0; i < n; ++i)
                for (long j = n - 1; j >= i; --j)
                    tau[size_t(j)] = tau[size_t(j)] + tau[size_t(j + 1)] * cb;
            auto pellet_holds = [&](double radius) {
                double lhs = tau[size_t(m)].mag_lower();
                for (long j = 1; j <= m; ++j) lhs *= radius;
                double rhs = 0.0;
                for (long j = 0; j <= n; ++j) {
                    if (j == m) continue;
                    double term = tau[size_t(j)].mag_upper();
                    for (long i = 0; i < j; ++i) term *= radius;
                    rhs += term;
                }
                return lhs > rhs;
            };
            double R = opts.cluster_accept * scale * 0.5;
            if (!pellet_holds(R)) {
                if (std::getenv("JELONEK_ROOT_DEBUG")) {
                    std::fprintf(stderr, "[pellet] m=%ld center=(%g,%g) R=%g\n", m,
                                 center.re.to_double(), center.im.to_double(), R);
                    for (long j = 0; j <= n; ++j)
                        std::fprintf(stderr, "  tau[%ld]: up=%g lo=%g rad=%g\n", j,
                                     tau[size_t(j)].mag_upper(), tau[size_t(j)].mag_lower(),
                                     tau[size_t(j)].rad);
                }
                throw precision_error("root cluster of size " + std::to_string(m) +
                                      " not resolved at the working precision");
            }
            for (int step = 0; step < 200 && pellet_holds(R * 0.5); ++step) R *= 0.5;
            crad = R;
        } else if (crad > std::ldexp(1.0, -40) * scale) {
            throw precision_error("root certification radius too large; raise precision");
        }
        if (std::getenv("JELONEK_ROOT_DEBUG") && crad > 1e-24)
            std::fprintf(stderr, "[cert] deg=%ld m=%ld center=(%g,%g) rad=%g prec=%ld\n", n, m,
                         center.re.to_double(), center.im.to_double(), crad, prec);
        out.push_back({center, crad, m});
    }

    std::sort(out.begin(), out.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        int c = cmp(a.z.re, b.z.re);
        if (c != 0) return c < 0;
        return cmp(a.z.im, b.z.im) < 0;
    });
    return out;
}

// Continued-fraction rational reconstruction from an exact dyadic value.
std::optional<Rational> reconstruct_rational(const Rational& x, const Integer& den_bound,
                                             const Rational& tol) {
    Rational a = x;
    Integer p0(1), q0(0), p1, q1;
    Integer ip = Integer(a.get_num() / a.get_den());
    if (a < 0 && Rational(ip) != a) ip -= 1;  // floor
    p1 = ip;
    q1 = 1;
    Rational frac = a - Rational(ip);
    for (int it = 0; it < 256; ++it) {
        Rational cand(p1, q1);
        cand.canonicalize();
        Rational err = cand - x;
        if (err < 0) err = -err;
        if (err <= tol && q1 <= den_bound) return cand;
        if (frac == 0) break;
        a = 1 / frac;
        ip = Integer(a.get_num() / a.get_den());
        if (a < 0 && Rational(ip) != a) ip -= 1;
        frac = a - Rational(ip);
        Integer p2 = ip * p1 + p0;
        Integer q2 = ip * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (q1 > den_bound * 4 + 16) break;
    }
    return std::nullopt;
}

std::vector<Ball> to_ball_poly(const std::vector<Rational>& f, long prec) {
    std::vector<Ball> b;
    b.reserve(f.size());
    for (const auto& c : f) b.push_back(Ball::from_rational(c, prec));
    return b;
}

// Roots of one squarefree exact factor; rational roots exact, rest certified.
std::vector<Scalar> squarefree_factor_roots(const std::vector<Rational>& g,
                                            const RootOptions& opts) {
    std::vector<Scalar> out;
    std::vector<Rational> f = g;
    rupoly::trim(f);
    long deg = rupoly::degree(f);
    if (deg <= 0) return out;
    if (deg == 1 && !opts.force_ball) {
        out.emplace_back(Rational(-f[0] / f[1]));
        return out;
    }
    if (deg == 2 && !opts.force_ball) {
        // Exact quadratic split when the discriminant is a rational square.
        Rational a = f[2], b = f[1], c = f[0];
        Rational disc = b * b - 4 * a * c;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_num().get_mpz_t()) &&
            mpz_perfect_square_p(disc.get_den().get_mpz_t())) {
            Integer sn, sd;
            mpz_sqrt(sn.get_mpz_t(), disc.get_num().get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), disc.get_den().get_mpz_t());
            Rational s(sn, sd);
            s.canonicalize();
            out.emplace_back(Rational((-b + s) / (2 * a)));
            out.emplace_back(Rational((-b - s) / (2 * a)));
            std::sort(out.begin(), out.end(),
                      [](const Scalar& x, const Scalar& y) { return scalar_order(x, y) < 0; });
            return out;
        }
    }

    // Integer form for the denominator bound of rational-root recognition.
    Integer den_lcm(1);
    for (const auto& cf : f) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), cf.get_den().get_mpz_t());
    Integer lead = Integer(f.back().get_num() * den_lcm / f.back().get_den());
    if (lead < 0) lead = -lead;

    auto certified = aberth(to_ball_poly(f, opts.prec), opts);
    Rational tol = rat_pow(rat(1, 2), opts.prec - 24);
    for (const auto& cr : certified) {
        bool real_like = std::abs(cr.z.im.to_double()) <= std::max(cr.rad * 4.0, 1e-300) ||
                         cr.z.im.is_zero();
        if (real_like && !opts.force_ball) {
            mpq_t q;
            mpq_init(q);
            mpfr_get_q(q, cr.z.re.raw());
            Rational approx(q);
            mpq_clear(q);
            auto cand = reconstruct_rational(approx, lead, tol);
            if (cand && rupoly::eval(f, *cand) == 0) {
                out.emplace_back(*cand);
                continue;
            }
        }
        out.emplace_back(to_ball(cr.z, cr.rad));
    }
    std::sort(out.begin(), out.end(),
              [](const Scalar& x, const Scalar& y) { return scalar_order(x, y) < 0; });
    return out;
}

} // namespace

std::vector<ScalarRoot> roots_of_exact(std::vector<Rational> f, const RootOptions& opts) {
    rupoly::trim(f);
    std::vector<ScalarRoot> out;
    if (rupoly::degree(f) < 1) return out;
    for (const auto& [factor, mult] : rupoly::squarefree_decompose(std::move(f))) {
        for (auto& root : squarefree_factor_roots(factor, opts))
            out.push_back({std::move(root), mult});
    }
    std::sort(out.begin(), out.end(), [](const ScalarRoot& a, const ScalarRoot& b) {
        return scalar_order(a.value, b.value) < 0;
    });
    return out;
}

std::vector<ScalarRoot> roots_of_ball(const std::vector<Ball>& f, const RootOptions& opts) {
    std::vector<ScalarRoot> out;
    if (f.size() <= 1) return out;
    for (const auto& cr : aberth(f, opts))
        out.push_back({Scalar(to_ball(cr.z, cr.rad)), cr.multiplicity});
    std::sort(out.begin(), out.end(), [](const ScalarRoot& a, const ScalarRoot& b) {
        return scalar_order(a.value, b.value) < 0;
    });
    return out;
}

std::vector<ScalarRoot> roots_of(const XiPoly& f, const RootOptions& opts) {
    if (f.degree() < 1) return {};
    if (auto exact = f.exact_coeffs()) return roots_of_exact(std::move(*exact), opts);
    std::vector<Ball> b;
    b.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) b.push_back(c.to_ball(opts.prec));
    return roots_of_ball(b, opts);
}

} // namespace jelonek
