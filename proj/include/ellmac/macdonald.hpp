#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ellmac/functions.hpp"
#include "ellmac/report.hpp"

namespace ellmac {

/* ---------------------------------------------------------------------
 * The Macdonald q-difference operator on the y-ring
 *
 *   D_N(s;q,t) = sum_k s_k prod_{l<k} (1-t x_k/x_l)/(1-x_k/x_l)
 *                          prod_{l>k} (1-x_l/(t x_k))/(1-x_l/x_k)  T_{q,x_k}
 *
 * In the ratio variables y_i = x_{i+1}/x_i the shift T_{q,x_k} scales the
 * coefficient of a monomial by q^{e_{k-1} - e_k} (exponents of y_{k-1}
 * and y_k; out-of-range indices read 0).
 * ------------------------------------------------------------------- */

struct DifferenceOperatorSpec {
    long N;
    Rat q, t;
    std::vector<Rat> s;
};

inline Series q_shift(const Series& f, long k, const Rat& q, long N) {
    Series out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        long e_prev = (k >= 2) ? m[static_cast<std::size_t>(k - 2)] : 0;
        long e_k = (k <= N - 1) ? m[static_cast<std::size_t>(k - 1)] : 0;
        out.add_term(m, c * rat_pow(q, e_prev - e_k));
    }
    return out;
}

inline Series apply_DN(const Series& f, const DifferenceOperatorSpec& spec) {
    const Ring& ring = f.ring();
    if (ring->arity() != static_cast<std::size_t>(spec.N - 1))
        throw ring_error("apply_DN: series must live in the y-variables of rank N");
    Series total = Series::zero(ring);
    for (long k = 1; k <= spec.N; ++k) {
        Series pre = Series::one(ring);
        for (long l = 1; l < k; ++l) {
            Mono m = ratio_mono(ring, l, k, 0);  // x_k/x_l
            Series num = Series::one(ring);
            num.add_term(m, -spec.t);
            Series den = Series::one(ring);
            den.add_term(m, Rat(-1));
            pre = pre * num * invert_unit(den);
        }
        for (long l = k + 1; l <= spec.N; ++l) {
            Mono m = ratio_mono(ring, k, l, 0);  // x_l/x_k
            Series num = Series::one(ring);
            num.add_term(m, -Rat(1) / spec.t);
            Series den = Series::one(ring);
            den.add_term(m, Rat(-1));
            pre = pre * num * invert_unit(den);
        }
        total = total + scale(pre * q_shift(f, k, spec.q, spec.N),
                              spec.s[static_cast<std::size_t>(k - 1)]);
    }
    return total;
}

/* D_N f^{gl_N} - (s_1+...+s_N) f^{gl_N}; identically zero by the
 * eigenfunction property. */
inline Series eigen_residual(long N, int D, const Rat& q, const Rat& t,
                             const std::vector<Rat>& s) {
    auto ring = ring_y(N, D);
    Series f = f_gln_numeric(ring, N, q, t, s);
    Rat ssum(0);
    for (const Rat& v : s) ssum += v;
    return apply_DN(f, {N, q, t, s}) - scale(f, ssum);
}

/* ---------------------------------------------------------------------
 * Bispectral duality:
 *   prod_{i<j} (q s_j/s_i;q)/(q s_j/(t s_i);q) f^{gl_N}(x;s)
 * = prod_{i<j} (q x_j/x_i;q)/(q x_j/(t x_i);q) f^{gl_N}(s;x)
 * as series in (y, sigma).
 * ------------------------------------------------------------------- */
inline VerificationReport check_bispectral(long N, int D, const Rat& q, const Rat& t) {
    VerificationReport rep;
    rep.identity = "bispectral";
    auto ring = ring_ys(N, D);
    long soff = N - 1;

    auto poch_ratio = [&](long off) {
        Series acc = Series::one(ring);
        for (long i = 1; i <= N; ++i)
            for (long j = i + 1; j <= N; ++j) {
                Mono m = ratio_mono(ring, i, j, off);
                acc = acc * qpoch_infinite_series(ring, q, m, q, +1);
                acc = acc * qpoch_infinite_series(ring, q / t, m, q, -1);
            }
        return acc;
    };

    Series lhs = poch_ratio(soff) * f_gln(ring, N, q, t, formal_ratio(ring, soff),
                                          [&](long i, long j) { return ratio_mono(ring, i, j, 0); });
    Series rhs = poch_ratio(0) * f_gln(ring, N, q, t, formal_ratio(ring, 0),
                                       [&](long i, long j) { return ratio_mono(ring, i, j, soff); });
    compare_all_coefficients(lhs, rhs, rep);
    return rep;
}

/* Poincare duality:
 *   f^{gl_N}(x;s|q,t)
 * = prod_{i<j} (t x_j/x_i;q)/(q x_j/(t x_i);q) f^{gl_N}(x;s|q,q/t) */
inline VerificationReport check_poincare(long N, int D, const Rat& q, const Rat& t,
                                         const std::vector<Rat>& s) {
    VerificationReport rep;
    rep.identity = "poincare";
    if (q == t) {
        rep.status = "error";
        rep.error_message = "non-generic parameters: q = t degenerates q/t";
        return rep;
    }
    auto ring = ring_y(N, D);
    Series lhs = f_gln_numeric(ring, N, q, t, s);
    Series pre = Series::one(ring);
    for (long i = 1; i <= N; ++i)
        for (long j = i + 1; j <= N; ++j) {
            Mono m = ratio_mono(ring, i, j, 0);
            pre = pre * qpoch_infinite_series(ring, t, m, q, +1);
            pre = pre * qpoch_infinite_series(ring, q / t, m, q, -1);
        }
    Series rhs = pre * f_gln_numeric(ring, N, q, q / t, s);
    compare_all_coefficients(lhs, rhs, rep);
    return rep;
}

/* ---------------------------------------------------------------------
 * Independent Macdonald polynomial oracle, by Gram-Schmidt on the
 * (q,t) power-sum inner product <p_mu, p_nu> = delta z_mu prod
 * (1-q^{mu_i})/(1-t^{mu_i}).  Entirely separate from the f^{gl_N} path.
 * ------------------------------------------------------------------- */

namespace sym {

/* dense symmetric polynomials of homogeneous degree n in n variables */
using Expo = std::vector<long>;
using Poly = std::map<Expo, Rat>;

inline Poly power_sum(long r, long nvars) {
    Poly p;
    for (long i = 0; i < nvars; ++i) {
        Expo e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = r;
        p[e] = 1;
    }
    return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rat& slot = r[e];
            slot += ca * cb;
            if (slot == 0) r.erase(e);
        }
    return r;
}

/* coefficient of the monomial with sorted exponent vector lam */
inline Rat coeff_at(const Poly& p, const Partition& lam, long nvars) {
    Expo e(static_cast<std::size_t>(nvars), 0);
    for (long i = 1; i <= lam.length(); ++i) e[static_cast<std::size_t>(i - 1)] = lam.part(i);
    auto it = p.find(e);
    return it == p.end() ? Rat(0) : it->second;
}

/* z_mu(q,t) = prod_r r^{m_r} m_r!  *  prod_i (1-q^{mu_i})/(1-t^{mu_i}) */
inline Rat z_factor(const Partition& mu, const Rat& q, const Rat& t) {
    std::map<long, long> mult;
    for (long i = 1; i <= mu.length(); ++i) ++mult[mu.part(i)];
    Rat z(1);
    for (auto [part, m] : mult) {
        z *= rat_pow(Rat(part), m);
        for (long c = 2; c <= m; ++c) z *= c;
    }
    for (long i = 1; i <= mu.length(); ++i)
        z *= (Rat(1) - rat_pow(q, mu.part(i))) / (Rat(1) - rat_pow(t, mu.part(i)));
    return z;
}

}  // namespace sym

/* Macdonald polynomial P_lambda in the monomial-symmetric basis:
 * map from partitions mu of |lambda| to the coefficient of m_mu. */
inline std::map<Partition, Rat> macdonald_oracle_m_basis(const Partition& lam, const Rat& q,
                                                         const Rat& t) {
    long n = lam.size();
    if (n == 0) return {{Partition(), Rat(1)}};
    auto parts = partitions_of(n);  // descending lex refines dominance
    long B = static_cast<long>(parts.size());

    // p_mu expanded over the m-basis: integer matrix A[mu][alpha]
    std::vector<std::vector<Rat>> A(static_cast<std::size_t>(B),
                                    std::vector<Rat>(static_cast<std::size_t>(B)));
    for (long r = 0; r < B; ++r) {
        sym::Poly p{{sym::Expo(static_cast<std::size_t>(n), 0), Rat(1)}};
        for (long i = 1; i <= parts[static_cast<std::size_t>(r)].length(); ++i)
            p = sym::mul(p, sym::power_sum(parts[static_cast<std::size_t>(r)].part(i), n));
        for (long c = 0; c < B; ++c)
            A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                sym::coeff_at(p, parts[static_cast<std::size_t>(c)], n);
    }

    // invert A by Gauss-Jordan: B_inv rows express m_beta in the p-basis
    std::vector<std::vector<Rat>> M = A, Inv(static_cast<std::size_t>(B),
                                             std::vector<Rat>(static_cast<std::size_t>(B)));
    for (long i = 0; i < B; ++i) Inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (long col = 0; col < B; ++col) {
        long piv = -1;
        for (long r = col; r < B; ++r)
            if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw param_error("non-generic parameters: singular transition matrix");
        std::swap(M[static_cast<std::size_t>(piv)], M[static_cast<std::size_t>(col)]);
        std::swap(Inv[static_cast<std::size_t>(piv)], Inv[static_cast<std::size_t>(col)]);
        Rat d = M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (long c = 0; c < B; ++c) {
            M[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
            Inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
        }
        for (long r = 0; r < B; ++r) {
            if (r == col) continue;
            Rat f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (long c = 0; c < B; ++c) {
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
                Inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * Inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            }
        }
    }
    // p_mu = sum_alpha A[mu][alpha] m_alpha, so m_beta = sum_mu
    // Inv[beta][mu] p_mu and the m-basis Gram entries follow from the
    // diagonal p-basis pairing
    auto inner_mm = [&](long b1, long b2) {
        Rat acc(0);
        for (long mu = 0; mu < B; ++mu)
            acc += Inv[static_cast<std::size_t>(b1)][static_cast<std::size_t>(mu)] *
                   Inv[static_cast<std::size_t>(b2)][static_cast<std::size_t>(mu)] *
                   sym::z_factor(parts[static_cast<std::size_t>(mu)], q, t);
        return acc;
    };

    // Gram-Schmidt from the dominance-smallest partition upward
    std::vector<std::vector<Rat>> P;  // coordinates over m-basis
    std::vector<Rat> norms;
    std::vector<long> order;  // indices into parts, increasing dominance
    for (long i = B - 1; i >= 0; --i) order.push_back(i);

    std::map<Partition, Rat> result;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        long b = order[oi];
        std::vector<Rat> v(static_cast<std::size_t>(B));
        v[static_cast<std::size_t>(b)] = 1;
        for (std::size_t pj = 0; pj < P.size(); ++pj) {
            // <m_b, P_j> / <P_j, P_j>
            Rat num(0);
            for (long c = 0; c < B; ++c)
                if (P[pj][static_cast<std::size_t>(c)] != 0)
                    num += P[pj][static_cast<std::size_t>(c)] * inner_mm(b, c);
            if (norms[pj] == 0) throw param_error("non-generic parameters: Gram matrix singular");
            Rat f = num / norms[pj];
            for (long c = 0; c < B; ++c) v[static_cast<std::size_t>(c)] -= f * P[pj][static_cast<std::size_t>(c)];
        }
        Rat nv(0);
        for (long c1 = 0; c1 < B; ++c1)
            for (long c2 = 0; c2 < B; ++c2)
                if (v[static_cast<std::size_t>(c1)] != 0 && v[static_cast<std::size_t>(c2)] != 0)
                    nv += v[static_cast<std::size_t>(c1)] * v[static_cast<std::size_t>(c2)] *
                          inner_mm(c1, c2);
        P.push_back(v);
        norms.push_back(nv);
        if (parts[static_cast<std::size_t>(b)] == lam) {
            for (long c = 0; c < B; ++c)
                if (v[static_cast<std::size_t>(c)] != 0)
                    result[parts[static_cast<std::size_t>(c)]] = v[static_cast<std::size_t>(c)];
            break;
        }
    }
    return result;
}

/* P_lambda expanded in N variables: exponent vector -> coefficient. */
inline std::map<std::vector<long>, Rat> macdonald_oracle(const Partition& lam, long N,
                                                         const Rat& q, const Rat& t) {
    if (lam.length() > N) throw param_error("macdonald_oracle: l(lambda) > N");
    std::map<std::vector<long>, Rat> out;
    for (const auto& [mu, c] : macdonald_oracle_m_basis(lam, q, t)) {
        if (mu.length() > N) continue;  // m_mu vanishes in N variables
        std::vector<long> e(static_cast<std::size_t>(N), 0);
        for (long i = 1; i <= mu.length(); ++i) e[static_cast<std::size_t>(i - 1)] = mu.part(i);
        std::sort(e.begin(), e.end());
        do {
            out[e] += c;
        } while (std::next_permutation(e.begin(), e.end()));
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

/* The Hall pairing of two oracle outputs, for the orthogonality check. */
inline Rat macdonald_pairing(const std::map<Partition, Rat>& a, const std::map<Partition, Rat>& b,
                             long n, const Rat& q, const Rat& t) {
    auto parts = partitions_of(n);
    long B = static_cast<long>(parts.size());
    std::vector<std::vector<Rat>> A(static_cast<std::size_t>(B),
                                    std::vector<Rat>(static_cast<std::size_t>(B)));
    for (long r = 0; r < B; ++r) {
        sym::Poly p{{sym::Expo(static_cast<std::size_t>(n), 0), Rat(1)}};
        for (long i = 1; i <= parts[static_cast<std::size_t>(r)].length(); ++i)
            p = sym::mul(p, sym::power_sum(parts[static_cast<std::size_t>(r)].part(i), n));
        for (long c = 0; c < B; ++c)
            A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                sym::coeff_at(p, parts[static_cast<std::size_t>(c)], n);
    }
    // coordinates of a and b in the p-basis via solving A^T x = coords
    auto to_p = [&](const std::map<Partition, Rat>& f) {
        // f = sum_beta f_beta m_beta = sum_mu x_mu p_mu with
        // m_beta = sum_mu Inv[mu][beta] p_mu
        std::vector<std::vector<Rat>> M = A;
        std::vector<Rat> rhs(static_cast<std::size_t>(B));
        for (long c = 0; c < B; ++c) {
            auto it = f.find(parts[static_cast<std::size_t>(c)]);
            rhs[static_cast<std::size_t>(c)] = (it == f.end()) ? Rat(0) : it->second;
        }
        // solve x^T A = rhs^T  i.e.  A^T x = rhs
        std::vector<std::vector<Rat>> T(static_cast<std::size_t>(B),
                                        std::vector<Rat>(static_cast<std::size_t>(B)));
        for (long r = 0; r < B; ++r)
            for (long c = 0; c < B; ++c)
                T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    M[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        // Gaussian elimination
        std::vector<Rat> x = rhs;
        for (long col = 0; col < B; ++col) {
            long piv = -1;
            for (long r = col; r < B; ++r)
                if (T[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw param_error("singular transition matrix");
            std::swap(T[static_cast<std::size_t>(piv)], T[static_cast<std::size_t>(col)]);
            std::swap(x[static_cast<std::size_t>(piv)], x[static_cast<std::size_t>(col)]);
            Rat d = T[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (long c = 0; c < B; ++c) T[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
            x[static_cast<std::size_t>(col)] /= d;
            for (long r = 0; r < B; ++r) {
                if (r == col) continue;
                Rat fct = T[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (fct == 0) continue;
                for (long c = 0; c < B; ++c)
                    T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                        fct * T[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
                x[static_cast<std::size_t>(r)] -= fct * x[static_cast<std::size_t>(col)];
            }
        }
        return x;
    };
    auto xa = to_p(a), xb = to_p(b);
    Rat acc(0);
    for (long mu = 0; mu < B; ++mu)
        acc += xa[static_cast<std::size_t>(mu)] * xb[static_cast<std::size_t>(mu)] *
               sym::z_factor(parts[static_cast<std::size_t>(mu)], q, t);
    return acc;
}

/* ---------------------------------------------------------------------
 * Specialization s_i = q^{lambda_i} t^{N-i}: x^lambda f^{gl_N} becomes
 * the Macdonald polynomial P_lambda.  The series is tracked in absolute
 * x-exponents; the map from y-monomials to x-exponent vectors is
 * injective, so each tracked coefficient is final.
 * ------------------------------------------------------------------- */
inline VerificationReport check_specialization(const Partition& lam, long N, int D, const Rat& q,
                                               const Rat& t) {
    VerificationReport rep;
    rep.identity = "spec-macdonald";
    rep.params["lambda"] = lam.to_string();
    if (lam.length() > N) {
        rep.status = "error";
        rep.error_message = "l(lambda) > N";
        return rep;
    }
    auto oracle = macdonald_oracle(lam, N, q, t);

    // y-degree needed to reach every oracle monomial from x^lambda
    long needed = 0;
    for (const auto& [v, c] : oracle) {
        long deg = 0, e = 0;
        for (long j = 1; j <= N; ++j) {
            e += lam.part(j) - v[static_cast<std::size_t>(j - 1)];
            if (e < 0) { deg = -1; break; }
            deg += e;
        }
        if (deg < 0) {
            rep.status = "error";
            rep.error_message = "oracle monomial outside the x^lambda cone";
            return rep;
        }
        needed = std::max(needed, deg);
    }
    if (D < needed) {
        rep.status = "error";
        rep.error_message = "truncation too small: need degree " + std::to_string(needed);
        return rep;
    }
    rep.params["margin"] = std::to_string(D - needed);
    rep.degree = D;

    std::vector<Rat> s;
    for (long i = 1; i <= N; ++i) s.push_back(rat_pow(q, lam.part(i)) * rat_pow(t, N - i));
    auto ring = ring_y(N, D);
    Series f = f_gln_numeric(ring, N, q, t, s);

    for (const auto& [m, c] : f.terms()) {
        ++rep.coefficients_compared;
        std::vector<long> v(static_cast<std::size_t>(N));
        bool negative = false;
        for (long j = 1; j <= N; ++j) {
            long e_prev = (j >= 2) ? m[static_cast<std::size_t>(j - 2)] : 0;
            long e_j = (j <= N - 1) ? m[static_cast<std::size_t>(j - 1)] : 0;
            v[static_cast<std::size_t>(j - 1)] = lam.part(j) + e_prev - e_j;
            if (v[static_cast<std::size_t>(j - 1)] < 0) negative = true;
        }
        Rat expect(0);
        if (!negative) {
            auto it = oracle.find(v);
            if (it != oracle.end()) expect = it->second;
        }
        if (c != expect) {
            std::ostringstream os;
            os << "x^(";
            for (long j = 0; j < N; ++j) os << (j ? "," : "") << v[static_cast<std::size_t>(j)];
            os << ")";
            rep.record_mismatch(os.str(), c, expect);
        }
    }
    // every oracle monomial inside the window must have been produced
    for (const auto& [v, c] : oracle) {
        Mono m(static_cast<std::size_t>(N - 1), 0);
        long e = 0;
        for (long j = 1; j <= N - 1; ++j) {
            e += lam.part(j) - v[static_cast<std::size_t>(j - 1)];
            m[static_cast<std::size_t>(j - 1)] = static_cast<std::uint32_t>(e);
        }
        if (f.coeff(m) != c) {
            std::ostringstream os;
            os << "x^(";
            for (long j = 0; j < N; ++j) os << (j ? "," : "") << v[static_cast<std::size_t>(j)];
            os << ")";
            rep.record_mismatch(os.str(), f.coeff(m), c);
        }
    }
    return rep;
}

}  // namespace ellmac
