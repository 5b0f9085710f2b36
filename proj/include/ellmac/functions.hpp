#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ellmac/partition.hpp"
#include "ellmac/qspecial.hpp"
#include "ellmac/series.hpp"

namespace ellmac {

/* ---------------------------------------------------------------------
 * Rings of the verification cone.  Layout of (y,w,sigma):
 *   y_1..y_{N-1}   indices 0..N-2      (y_i = x_{i+1}/x_i)
 *   w              index  N-1          (w = p x_1 / x_N)
 *   sigma_1..sigma_{N-1}  indices N..2N-2  (sigma_i = s_{i+1}/s_i)
 * p is never a ring variable; it is the alias w * y_1 ... y_{N-1}.
 * ------------------------------------------------------------------- */

inline std::vector<std::string> y_names(long N) {
    std::vector<std::string> v;
    for (long i = 1; i < N; ++i) v.push_back("y" + std::to_string(i));
    return v;
}

inline std::vector<std::string> sigma_names(long N) {
    std::vector<std::string> v;
    for (long i = 1; i < N; ++i) v.push_back("s" + std::to_string(i));
    return v;
}

inline Ring ring_y(long N, int D) { return make_ring(y_names(N), D); }

inline Ring ring_yw(long N, int D) {
    auto names = y_names(N);
    names.push_back("w");
    Mono p(names.size(), 1);  // w * y_1...y_{N-1}
    return make_ring(std::move(names), D, {{"p", p}});
}

inline Ring ring_yws(long N, int D) {
    auto names = y_names(N);
    names.push_back("w");
    Mono p(names.size(), 1);
    for (long i = 1; i < N; ++i) names.push_back("s" + std::to_string(i));
    p.resize(names.size(), 0);
    return make_ring(std::move(names), D, {{"p", p}});
}

inline Ring ring_ys(long N, int D) {
    auto names = y_names(N);
    for (auto& n : sigma_names(N)) names.push_back(n);
    return make_ring(std::move(names), D);
}

/* x_j/x_i as a y-monomial (1 <= i <= j <= N), placed at y-offset `off`. */
inline Mono ratio_mono(const Ring& ring, long i, long j, long off) {
    Mono m = ring->unit();
    for (long k = i; k < j; ++k) m[static_cast<std::size_t>(off + k - 1)] = 1;
    return m;
}

/* A parameter ratio as scalar * monomial; covers numeric and formal modes. */
struct RatioTerm {
    Rat scalar{1};
    Mono mono;
};
using RatioFn = std::function<RatioTerm(long i, long j)>;  // value of s_j/s_i, i <= j

inline RatioFn numeric_ratio(const Ring& ring, const std::vector<Rat>& s) {
    return [&ring, s](long i, long j) -> RatioTerm {
        return {s[static_cast<std::size_t>(j - 1)] / s[static_cast<std::size_t>(i - 1)],
                ring->unit()};
    };
}

inline RatioFn formal_ratio(const Ring& ring, long offset) {
    return [&ring, offset](long i, long j) -> RatioTerm {
        return {Rat(1), ratio_mono(ring, i, j, offset)};
    };
}

/* ---------------------------------------------------------------------
 * Strictly upper triangular exponent matrices theta, the index set of
 * the f^{gl_N} and f^{ellip} sums.  weight(theta) = sum theta_ij (j-i)
 * is the total degree of the attached ratio monomial.
 * ------------------------------------------------------------------- */
class ThetaMatrix {
public:
    explicit ThetaMatrix(long N) : N_(N), e_(static_cast<std::size_t>(N * (N - 1) / 2), 0) {}

    long n() const { return N_; }

    long at(long i, long j) const {
        if (i >= j) return 0;
        return e_[idx(i, j)];
    }

    void set(long i, long j, long v) { e_[idx(i, j)] = v; }

    long weight() const {
        long w = 0;
        for (long i = 1; i <= N_; ++i)
            for (long j = i + 1; j <= N_; ++j) w += at(i, j) * (j - i);
        return w;
    }

    bool is_zero() const {
        for (long v : e_)
            if (v) return false;
        return true;
    }

private:
    long N_;
    std::vector<long> e_;

    std::size_t idx(long i, long j) const {
        // row-major over the strict upper triangle, 1-based (i,j)
        return static_cast<std::size_t>((i - 1) * (2 * N_ - i) / 2 + (j - i - 1));
    }
};

inline void enumerate_theta(long N, long max_weight,
                            const std::function<void(const ThetaMatrix&)>& fn) {
    std::vector<std::pair<long, long>> pairs;
    for (long i = 1; i <= N; ++i)
        for (long j = i + 1; j <= N; ++j) pairs.emplace_back(i, j);
    ThetaMatrix th(N);
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long budget) {
        if (k == pairs.size()) {
            fn(th);
            return;
        }
        auto [i, j] = pairs[k];
        long step = j - i;
        for (long v = 0; v * step <= budget; ++v) {
            th.set(i, j, v);
            rec(k + 1, budget - v * step);
        }
        th.set(i, j, 0);
    };
    rec(0, max_weight);
}

/* ---------------------------------------------------------------------
 * Asymptotically free Macdonald function f^{gl_N}
 * ------------------------------------------------------------------- */

namespace detail {

/* (c * M; q)_n contribution, multiplied into either the running scalar
 * (trivial monomial) or the running series. */
inline void fold_poch(const Ring& ring, const Rat& c, const Mono& M, const Rat& q, long n,
                      bool inverse, Rat& scalar, Series& series) {
    if (n == 0) return;
    if (mono_degree(M) == 0) {
        Rat v = qpoch_finite(c, q, n);
        if (inverse) {
            if (v == 0) throw param_error("non-generic parameters: vanishing Pochhammer");
            scalar /= v;
        } else {
            scalar *= v;
        }
        return;
    }
    Series p = qpoch_finite_series(ring, c, M, q, n);
    series = series * (inverse ? invert_unit(p) : p);
}

}  // namespace detail

/* c_N(theta; s|q,t), the coefficient of prod (x_j/x_i)^{theta_ij} in
 * f^{gl_N}.  The ratio function supplies s_j/s_i, numeric or formal. */
inline Series c_n_coeff(const Ring& ring, const ThetaMatrix& th, const Rat& q, const Rat& t,
                        const RatioFn& sr) {
    long N = th.n();
    Rat scalar(1);
    Series acc = Series::one(ring);
    for (long k = 2; k <= N; ++k) {
        for (long i = 1; i < k; ++i)
            for (long j = i + 1; j <= k; ++j) {
                long n = th.at(i, k);
                if (n == 0) continue;
                long A = 0;
                for (long a = k + 1; a <= N; ++a) A += th.at(i, a) - th.at(j, a);
                RatioTerm r = sr(i, j);
                Rat base = rat_pow(q, A) * r.scalar;
                detail::fold_poch(ring, base * t, r.mono, q, n, false, scalar, acc);
                detail::fold_poch(ring, base * q, r.mono, q, n, true, scalar, acc);
            }
        for (long i = 1; i < k; ++i)
            for (long j = i; j < k; ++j) {
                long n = th.at(i, k);
                if (n == 0) continue;
                long B = -th.at(j, k);
                for (long a = k + 1; a <= N; ++a) B += th.at(i, a) - th.at(j, a);
                RatioTerm r = sr(i, j);
                Rat base = rat_pow(q, B) * r.scalar;
                detail::fold_poch(ring, base * q / t, r.mono, q, n, false, scalar, acc);
                detail::fold_poch(ring, base, r.mono, q, n, true, scalar, acc);
            }
    }
    return scale(acc, scalar);
}

/* f^{gl_N} = sum_theta c_N(theta) * prod expo(i,j)^{theta_ij}.  The
 * expansion monomial for x_j/x_i is supplied by `expo` so the same sum
 * serves the x-formal and the role-swapped builds. */
inline Series f_gln(const Ring& ring, long N, const Rat& q, const Rat& t, const RatioFn& sr,
                    const std::function<Mono(long, long)>& expo) {
    Series total = Series::zero(ring);
    enumerate_theta(N, ring->degree, [&](const ThetaMatrix& th) {
        Mono m = ring->unit();
        for (long i = 1; i <= N; ++i)
            for (long j = i + 1; j <= N; ++j)
                for (long c = 0; c < th.at(i, j); ++c) m = mono_mul(m, expo(i, j));
        total = total + Series::term(ring, m, Rat(1)) * c_n_coeff(ring, th, q, t, sr);
    });
    return total;
}

/* numeric-s mode in the plain y-ring */
inline Series f_gln_numeric(const Ring& ring, long N, const Rat& q, const Rat& t,
                            const std::vector<Rat>& s) {
    return f_gln(ring, N, q, t, numeric_ratio(ring, s),
                 [&](long i, long j) { return ratio_mono(ring, i, j, 0); });
}

/* ---------------------------------------------------------------------
 * Elliptic lift f^{ellip}_N
 * ------------------------------------------------------------------- */

/* The printed coefficient c^{ellip}_N takes q/t in its third slot when
 * building f^{ellip}(.|q,t,p); this adapter is the single place where
 * that swap happens. */
inline Rat ellip_inner_t(const Rat& q, const Rat& t) { return q / t; }

/* c^{ellip}_N(theta; s|q,t_c,p): the double product of elliptic shifted
 * product ratios.  `sr` supplies the bracket arguments s_j/s_i. */
inline Series c_ellip_coeff(const Ring& ring, const ThetaMatrix& th, const Rat& q,
                            const Rat& t_c, const Mono& P, const RatioFn& sr) {
    long N = th.n();
    Series acc = Series::one(ring);
    for (long k = 2; k <= N; ++k) {
        for (long i = 1; i < k; ++i)
            for (long j = i + 1; j <= k; ++j) {
                long n = th.at(i, k);
                if (n == 0) continue;
                long A = 0;
                for (long a = k + 1; a <= N; ++a) A += th.at(i, a) - th.at(j, a);
                RatioTerm r = sr(i, j);
                Rat base = rat_pow(q, A) * r.scalar;
                acc = acc * wg_bracket_series(ring, base * t_c, r.mono, n, q, P);
                acc = acc * invert_unit(wg_bracket_series(ring, base * q, r.mono, n, q, P));
            }
        for (long i = 1; i < k; ++i)
            for (long j = i; j < k; ++j) {
                long n = th.at(i, k);
                if (n == 0) continue;
                long B = -th.at(j, k);
                for (long a = k + 1; a <= N; ++a) B += th.at(i, a) - th.at(j, a);
                RatioTerm r = sr(i, j);
                Rat base = rat_pow(q, B) * r.scalar;
                acc = acc * wg_bracket_series(ring, base * q / t_c, r.mono, n, q, P);
                acc = acc * invert_unit(wg_bracket_series(ring, base, r.mono, n, q, P));
            }
    }
    return acc;
}

/* f^{ellip}_N(x;s|q,t,p) with x-ratios as the expansion monomials and a
 * numeric spectral vector; a series in (y,w). */
inline Series f_ellip_numeric(const Ring& ring, long N, const Rat& q, const Rat& t,
                              const std::vector<Rat>& s) {
    Mono P = ring->alias("p");
    Rat tc = ellip_inner_t(q, t);
    Series total = Series::zero(ring);
    enumerate_theta(N, ring->degree, [&](const ThetaMatrix& th) {
        Mono m = ring->unit();
        for (long i = 1; i <= N; ++i)
            for (long j = i + 1; j <= N; ++j)
                for (long c = 0; c < th.at(i, j); ++c)
                    m = mono_mul(m, ratio_mono(ring, i, j, 0));
        total = total + Series::term(ring, m, Rat(1)) *
                            c_ellip_coeff(ring, th, q, tc, P, numeric_ratio(ring, s));
    });
    return total;
}

/* f^{ellip}_N(s;x|q,t,p): expansion in sigma, bracket arguments in
 * x-ratio monomials; the right-hand side of the main transformation. */
inline Series f_ellip_sigma(const Ring& ring, long N, const Rat& q, const Rat& t) {
    Mono P = ring->alias("p");
    Rat tc = ellip_inner_t(q, t);
    Series total = Series::zero(ring);
    RatioFn xratio = formal_ratio(ring, 0);
    enumerate_theta(N, ring->degree, [&](const ThetaMatrix& th) {
        Mono m = ring->unit();
        for (long i = 1; i <= N; ++i)
            for (long j = i + 1; j <= N; ++j)
                for (long c = 0; c < th.at(i, j); ++c)
                    m = mono_mul(m, ratio_mono(ring, i, j, N));  // sigma block
        total = total + Series::term(ring, m, Rat(1)) * c_ellip_coeff(ring, th, q, tc, P, xratio);
    });
    return total;
}

/* ---------------------------------------------------------------------
 * Non-stationary Ruijsenaars function f^{gl^_N}
 * ------------------------------------------------------------------- */

/* Plain build of the defining Nekrasov sum, numeric s, in the variables
 * z_j = p x_{j+1}/x_j (cyclic, z_N = p x_1/x_N).  kappa enters as an
 * exact rational. */
inline Series f_ghat_numeric(const Ring& ring, long N, int D, const Rat& q, const Rat& t,
                             const Rat& kappa, const std::vector<Rat>& s) {
    Series total = Series::zero(ring);
    enumerate_tuples(N, D, [&](const std::vector<Partition>& lam) {
        Rat coeff(1);
        for (long i = 1; i <= N; ++i)
            for (long j = 1; j <= N; ++j) {
                const Partition& li = lam[static_cast<std::size_t>(i - 1)];
                const Partition& lj = lam[static_cast<std::size_t>(j - 1)];
                Rat ratio = s[static_cast<std::size_t>(j - 1)] / s[static_cast<std::size_t>(i - 1)];
                Rat num = nekrasov_cyclic(j - i, N, li, lj, t * ratio, q, kappa);
                Rat den = nekrasov_cyclic(j - i, N, li, lj, ratio, q, kappa);
                if (den == 0)
                    throw param_error("vanishing denominator Nekrasov factor at (i,j)=(" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      ") tuple " + li.to_string() + " | " + lj.to_string());
                coeff *= num / den;
            }
        Mono m = ring->unit();
        long boxes = 0;
        for (long beta = 1; beta <= N; ++beta) {
            const Partition& lb = lam[static_cast<std::size_t>(beta - 1)];
            for (long alpha = 1; alpha <= lb.length(); ++alpha) {
                long zi = ((alpha + beta - 2) % N + N) % N;  // z_{zi+1}
                for (long c = 0; c < lb.part(alpha); ++c) {
                    m[static_cast<std::size_t>(zi)] += 1;
                    ++boxes;
                }
            }
        }
        total = total + Series::term(ring, m, coeff * rat_pow(t, -boxes));
    });
    return total;
}

namespace detail {

/* Box monomial of the shifted build: after the x' = p^{-k/N} x and
 * p^{1/N} substitutions every box at cyclic column r contributes
 * y_{r-1}/t in the interior and w/t at the wrap. */
inline Mono shifted_tuple_mono(const Ring& ring, long N, const std::vector<Partition>& lam) {
    Mono m = ring->unit();
    for (long beta = 1; beta <= N; ++beta) {
        const Partition& lb = lam[static_cast<std::size_t>(beta - 1)];
        for (long alpha = 1; alpha <= lb.length(); ++alpha) {
            long r = ((alpha + beta - 1) % N + N) % N + 1;
            std::size_t var = (r == 1) ? static_cast<std::size_t>(N - 1)   // w
                                       : static_cast<std::size_t>(r - 2);  // y_{r-1}
            m[var] += static_cast<std::uint32_t>(lb.part(alpha));
        }
    }
    return m;
}

}  // namespace detail

/* f^{gl^_N}(x', p^{1/N} | s', t^{-1/N} | q, t), the left-hand side of the
 * main transformation, as a series in (y, w, sigma).
 *
 * With s'_k = t^{k/N} s_k = tau^k s_k and kappa = tau^{-1}, every linear
 * factor's net tau exponent is a multiple of N and recombines into an
 * integer power of t; this is asserted on every factor.  Factors with
 * j > i carry inverse sigma monomials and run through the Laurent-prefix
 * normalization; the prefixes of each tuple must cancel exactly. */
inline Series f_ghat_shifted(const Ring& ring, long N, int D, const Rat& q, const Rat& tau) {
    Rat t = rat_pow(tau, N);
    Series total = Series::zero(ring);
    enumerate_tuples(N, D, [&](const std::vector<Partition>& lam) {
        std::vector<LaurentPrefix> prefixes;
        std::vector<Series> factors;
        Rat scalar(1);
        for (long i = 1; i <= N; ++i)
            for (long j = 1; j <= N; ++j) {
                const Partition& li = lam[static_cast<std::size_t>(i - 1)];
                const Partition& lj = lam[static_cast<std::size_t>(j - 1)];
                auto blocks = nekrasov_cyclic_blocks(j - i, N, li, lj);
                for (const auto& blk : blocks) {
                    long tau_exp = (j - i) - blk.b;  // u carries tau^{j-i}, kappa^b = tau^{-b}
                    if (tau_exp % N != 0)
                        throw ring_error("tau integrality violated in shifted build");
                    Rat tpow = rat_pow(t, tau_exp / N);
                    for (long m = 0; m < blk.order; ++m) {
                        Rat base_num = t * tpow * rat_pow(q, blk.a + m);
                        Rat base_den = tpow * rat_pow(q, blk.a + m);
                        if (i == j) {
                            Rat den = Rat(1) - base_den;
                            if (den == 0)
                                throw param_error(
                                    "vanishing denominator Nekrasov factor at (i,i), tuple " +
                                    li.to_string());
                            scalar *= (Rat(1) - base_num) / den;
                            continue;
                        }
                        std::vector<long> L(ring->arity(), 0);
                        long lo = std::min(i, j), hi = std::max(i, j);
                        long sgn = (i < j) ? 1 : -1;
                        for (long k2 = lo; k2 < hi; ++k2)
                            L[static_cast<std::size_t>(N + k2 - 1)] = sgn;  // sigma block
                        auto [pn, sn] = expand_linear_factor(ring, base_num, L, +1);
                        prefixes.push_back(pn);
                        factors.push_back(sn);
                        auto [pd, sd] = expand_linear_factor(ring, base_den, L, -1);
                        prefixes.push_back(pd);
                        factors.push_back(sd);
                    }
                }
            }
        Series coeff = finalize(ring, prefixes, factors);
        Mono m = detail::shifted_tuple_mono(ring, N, lam);
        total = total + Series::term(ring, m, scalar * rat_pow(t, -tuple_size(lam))) * coeff;
    });
    return total;
}

/* The p -> 0 degeneration build: f^{gl^_N}(p^delta x, p | kappa^delta s,
 * kappa | q, t) at numeric s, with kappa realized through its N-th root
 * kappa0 (kappa = kappa0^{-N}).  The box mechanics are exactly those of
 * the shifted build (interior boxes cancel the fractional p powers,
 * wraps give w), and the spectral shifts follow the same pattern with
 * kappa0 in place of tau: u carries kappa0^{j-i} s_j/s_i and the cyclic
 * parameter is kappa0^{-1}, so every factor's net kappa0 exponent is a
 * multiple of N.  Coefficients are plain rationals; the w-degree-0
 * slice is the object compared against f^{gl_N}(x;s|q,q/t). */
inline Series f_ghat_p_shifted(const Ring& ring, long N, int D, const Rat& q, const Rat& t,
                               const Rat& kappa0, const std::vector<Rat>& s) {
    Series total = Series::zero(ring);
    enumerate_tuples(N, D, [&](const std::vector<Partition>& lam) {
        Rat coeff(1);
        for (long i = 1; i <= N; ++i)
            for (long j = 1; j <= N; ++j) {
                const Partition& li = lam[static_cast<std::size_t>(i - 1)];
                const Partition& lj = lam[static_cast<std::size_t>(j - 1)];
                Rat ratio = s[static_cast<std::size_t>(j - 1)] / s[static_cast<std::size_t>(i - 1)];
                for (const auto& blk : nekrasov_cyclic_blocks(j - i, N, li, lj)) {
                    long k0_exp = (j - i) - blk.b;
                    if (k0_exp % N != 0)
                        throw ring_error("kappa0 integrality violated in p-limit build");
                    Rat base = ratio * rat_pow(q, blk.a) * rat_pow(kappa0, k0_exp);
                    for (long m = 0; m < blk.order; ++m) {
                        Rat qm = rat_pow(q, m);
                        Rat den = Rat(1) - base * qm;
                        if (den == 0)
                            throw param_error("vanishing denominator Nekrasov factor at (i,j)=(" +
                                              std::to_string(i) + "," + std::to_string(j) +
                                              ") tuple " + li.to_string() + " | " +
                                              lj.to_string());
                        coeff *= (Rat(1) - t * base * qm) / den;
                    }
                }
            }
        Mono m = detail::shifted_tuple_mono(ring, N, lam);
        total = total + Series::term(ring, m, coeff * rat_pow(t, -tuple_size(lam)));
    });
    return total;
}

/* ---------------------------------------------------------------------
 * The main-theorem prefactor
 *
 *   C = ( (pq/t;q,p)_inf / ((p;p)_inf (pt;q,p)_inf) )^N
 *       prod_{i<j} Gamma(t x_j/x_i;q,p)/Gamma(q x_j/x_i;q,p)
 *       prod_{i<j} (t s_j/s_i;q)_inf / (q s_j/s_i;q)_inf
 * ------------------------------------------------------------------- */

namespace detail {

/* (c M; q, p)_inf = prod_{m>=0} (c M p^m; q)_inf, truncated in p. */
inline Series double_poch(const Ring& ring, const Rat& c, const Mono& M, const Rat& q,
                          const Mono& P) {
    Series acc = Series::one(ring);
    Mono cur = M;
    while (mono_degree(cur) <= ring->degree) {
        acc = acc * qpoch_infinite_series(ring, c, cur, q, +1);
        cur = mono_mul(cur, P);
    }
    return acc;
}

}  // namespace detail

inline Series prefactor_C(const Ring& ring, long N, const Rat& q, const Rat& t) {
    Mono P = ring->alias("p");
    Series head = detail::double_poch(ring, q / t, P, q, P) *
                  invert_unit(qpoch_infinite_monomial_base(ring, Rat(1), P, P)) *
                  invert_unit(detail::double_poch(ring, t, P, q, P));
    Series acc = Series::one(ring);
    for (long i = 0; i < N; ++i) acc = acc * head;
    for (long i = 1; i <= N; ++i)
        for (long j = i + 1; j <= N; ++j) {
            Mono X = ratio_mono(ring, i, j, 0);
            Mono PX = mono_div(P, X);  // p x_i / x_j, nonnegative since j-i < N
            // Gamma(tX)/Gamma(qX) = (pq/(tX);q,p) (qX;q,p) / ((tX;q,p) (p/X;q,p))
            acc = acc * detail::double_poch(ring, q / t, PX, q, P);
            acc = acc * detail::double_poch(ring, q, X, q, P);
            acc = acc * invert_unit(detail::double_poch(ring, t, X, q, P));
            acc = acc * invert_unit(detail::double_poch(ring, Rat(1), PX, q, P));
        }
    for (long i = 1; i <= N; ++i)
        for (long j = i + 1; j <= N; ++j) {
            Mono S = ratio_mono(ring, i, j, N);
            acc = acc * qpoch_infinite_series(ring, t, S, q, +1);
            acc = acc * qpoch_infinite_series(ring, q, S, q, -1);
        }
    return acc;
}

}  // namespace ellmac
