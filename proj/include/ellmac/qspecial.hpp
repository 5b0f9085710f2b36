#pragma once

#include <vector>

#include "ellmac/partition.hpp"
#include "ellmac/rational.hpp"
#include "ellmac/series.hpp"

namespace ellmac {

/* Exact parameter bundle.  t is realized through its N-th root tau and
 * kappa through kappa0, so that the fractional shifts t^{k/N}, kappa^{1/N}
 * appearing in the shifted builds stay inside the rationals. */
struct ParamSet {
    Rat q = rat(2, 5);
    Rat tau = rat(4, 9);
    Rat kappa0 = rat(5, 8);
    long N = 2;
    std::vector<Rat> s;

    Rat t() const { return rat_pow(tau, N); }

    /* default spectral parameters: distinct primes over distinct primes */
    static std::vector<Rat> default_s(long n) {
        static const long nums[] = {2, 3, 5, 7, 11, 13};
        static const long dens[] = {7, 11, 13, 17, 19, 23};
        std::vector<Rat> out;
        for (long i = 0; i < n; ++i) out.push_back(rat(nums[i % 6], dens[i % 6]));
        return out;
    }

    static ParamSet defaults(long n) {
        ParamSet p;
        p.N = n;
        p.s = default_s(n);
        return p;
    }

    void check_generic() const {
        Rat tv = t();
        if (q == 0 || q == 1 || q == -1) throw param_error("non-generic parameters: q in {0,+1,-1}");
        if (tv == 0 || tv == 1 || tv == -1)
            throw param_error("non-generic parameters: t in {0,+1,-1}");
        if (tau == 0) throw param_error("non-generic parameters: tau = 0");
        if (q == tv) throw param_error("non-generic parameters: q = t");
        for (const Rat& si : s)
            if (si == 0) throw param_error("non-generic parameters: s_i = 0");
    }
};

/* (a;q)_n = prod_{m=0}^{n-1} (1 - a q^m), scalar form. */
inline Rat qpoch_finite(const Rat& a, const Rat& q, long n) {
    if (n < 0) throw param_error("qpoch_finite: negative order");
    Rat acc(1), aq = a;
    for (long m = 0; m < n; ++m) {
        acc *= Rat(1) - aq;
        aq *= q;
    }
    return acc;
}

/* (c M;q)_n as a polynomial series. */
inline Series qpoch_finite_series(const Ring& ring, const Rat& c, const Mono& M, const Rat& q,
                                  long n) {
    if (n < 0) throw param_error("qpoch_finite_series: negative order");
    Series acc = Series::one(ring);
    Rat cq = c;
    for (long m = 0; m < n; ++m) {
        Series f = Series::one(ring);
        f.add_term(M, -cq);
        acc = acc * f;
        cq *= q;
    }
    return acc;
}

/* Euler expansions of the infinite q-Pochhammer with scalar base q and a
 * positive-degree monomial argument:
 *   sign=+1:  (cM;q)_inf     = sum_k (-1)^k q^{k(k-1)/2} (cM)^k / (q;q)_k
 *   sign=-1:  1/(cM;q)_inf   = sum_k (cM)^k / (q;q)_k
 * The graded pieces are finite exactly because deg M >= 1. */
inline Series qpoch_infinite_series(const Ring& ring, const Rat& c, const Mono& M, const Rat& q,
                                    int sign) {
    Series acc = Series::one(ring);
    if (c == 0) return acc;
    long dM = mono_degree(M);
    if (dM < 1) throw ring_error("qpoch_infinite_series: monomial must have positive degree");
    Rat ck(1), qq(1), qbin(1);  // c^k, (q;q)_k, q^{k(k-1)/2}
    Mono Mk = ring->unit();
    for (long k = 1; k * dM <= ring->degree; ++k) {
        ck *= c;
        Rat fac = Rat(1) - rat_pow(q, k);
        if (fac == 0) throw param_error("(q;q)_k vanished: non-generic q");
        qq *= fac;
        Mk = mono_mul(Mk, M);
        if (sign > 0) {
            qbin = rat_pow(q, k * (k - 1) / 2);
            acc.add_term(Mk, (k % 2 ? -1 : 1) * qbin * ck / qq);
        } else {
            acc.add_term(Mk, ck / qq);
        }
    }
    return acc;
}

/* prod_{m=0}^{inf} (1 - c M P^m) truncated; the base P is a monomial of
 * positive degree, so the product is exactly finite per grade. */
inline Series qpoch_infinite_monomial_base(const Ring& ring, const Rat& c, const Mono& M,
                                           const Mono& P) {
    long dP = mono_degree(P);
    if (dP < 1) throw ring_error("monomial base must have positive degree");
    Series acc = Series::one(ring);
    if (c == 0) return acc;
    Mono cur = M;
    while (mono_degree(cur) <= ring->degree) {
        Series f = Series::one(ring);
        f.add_term(cur, -c);
        acc = acc * f;
        cur = mono_mul(cur, P);
    }
    return acc;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) {
    Mono r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

/* theta_P(c M) = (cM;P)_inf (P/(cM);P)_inf.  Requires M | P (or M
 * trivial) so that both halves live in the monomial cone. */
inline Series theta_p_series(const Ring& ring, const Rat& c, const Mono& M, const Mono& P) {
    if (c == 0) throw ring_error("inadmissible monomial: theta at zero argument");
    if (!mono_divides(M, P))
        throw ring_error("inadmissible monomial: theta argument does not divide p");
    Series first = qpoch_infinite_monomial_base(ring, c, M, P);
    Series second = qpoch_infinite_monomial_base(ring, Rat(1) / c, mono_div(P, M), P);
    return first * second;
}

/* Elliptic shifted product <cM>_n = Gamma(q^n cM)/Gamma(cM), realized as
 * the finite theta product prod_{k=0}^{n-1} theta_P(q^k cM). */
inline Series wg_bracket_series(const Ring& ring, const Rat& c, const Mono& M, long n,
                                const Rat& q, const Mono& P) {
    if (n < 0) throw param_error("wg_bracket_series: negative order");
    Series acc = Series::one(ring);
    Rat cq = c;
    for (long k = 0; k < n; ++k) {
        acc = acc * theta_p_series(ring, cq, M, P);
        cq *= q;
    }
    return acc;
}

/* Nekrasov factor, both printed product forms:
 *   form 1: prod_{l in lam} (1 - u q^{-a_mu-1} t^{-leg_lam})
 *           prod_{m in mu}  (1 - u q^{a_lam}  t^{leg_mu+1})
 *   form 2: the same with the two cell products swapped. */
inline Rat nekrasov(const Partition& lam, const Partition& mu, const Rat& u, const Rat& q,
                    const Rat& t, int form = 1) {
    Rat acc(1);
    Partition lam_c = lam.conjugate(), mu_c = mu.conjugate();
    for (long i = 1; i <= lam.length(); ++i) {
        for (long j = 1; j <= lam.part(i); ++j) {
            long a_mu = mu.part(i) - j, leg_lam = lam_c.part(j) - i;
            long a_lam = lam.part(i) - j, leg_mu = mu_c.part(j) - i;
            if (form == 1)
                acc *= Rat(1) - u * rat_pow(q, -a_mu - 1) * rat_pow(t, -leg_lam);
            else
                acc *= Rat(1) - u * rat_pow(q, a_lam) * rat_pow(t, leg_mu + 1);
        }
    }
    for (long i = 1; i <= mu.length(); ++i) {
        for (long j = 1; j <= mu.part(i); ++j) {
            long a_lam = lam.part(i) - j, leg_mu = mu_c.part(j) - i;
            long a_mu = mu.part(i) - j, leg_lam = lam_c.part(j) - i;
            if (form == 1)
                acc *= Rat(1) - u * rat_pow(q, a_lam) * rat_pow(t, leg_mu + 1);
            else
                acc *= Rat(1) - u * rat_pow(q, -a_mu - 1) * rat_pow(t, -leg_lam);
        }
    }
    return acc;
}

/* One finite q-Pochhammer block of the cyclic Nekrasov factor: the
 * factors (1 - u q^{a+m} kappa^b) for m = 0..order-1. */
struct CyclicPochBlock {
    long a;      // starting q exponent
    long b;      // kappa exponent
    long order;  // Pochhammer length, > 0
};

/* Factor blocks of N^{(k|N)}_{lam,mu}(u|q,kappa).  The double products
 * run over j >= i >= 1 with j-i = k (mod N) and beta >= alpha >= 1 with
 * beta-alpha = -k-1 (mod N); rows beyond the supports carry Pochhammers
 * of order zero, so the iteration below is exact, not a truncation. */
inline std::vector<CyclicPochBlock> nekrasov_cyclic_blocks(long k, long N, const Partition& lam,
                                                           const Partition& mu) {
    if (N < 1) throw param_error("cyclic Nekrasov: N must be positive");
    std::vector<CyclicPochBlock> out;
    long kmod = ((k % N) + N) % N;
    for (long j = 1; j <= lam.length(); ++j) {
        long order = lam.part(j) - lam.part(j + 1);
        if (order == 0) continue;
        for (long d = kmod; d <= j - 1; d += N) {
            long i = j - d;
            out.push_back({-mu.part(i) + lam.part(j + 1), d, order});
        }
    }
    long emod = (((-k - 1) % N) + N) % N;
    for (long beta = 1; beta <= mu.length(); ++beta) {
        long order = mu.part(beta) - mu.part(beta + 1);
        if (order == 0) continue;
        for (long e = emod; e <= beta - 1; e += N) {
            long alpha = beta - e;
            out.push_back({lam.part(alpha) - mu.part(beta), -e - 1, order});
        }
    }
    return out;
}

inline Rat nekrasov_cyclic(long k, long N, const Partition& lam, const Partition& mu,
                           const Rat& u, const Rat& q, const Rat& kappa) {
    Rat acc(1);
    for (const auto& blk : nekrasov_cyclic_blocks(k, N, lam, mu)) {
        Rat base = u * rat_pow(q, blk.a) * rat_pow(kappa, blk.b);
        acc *= qpoch_finite(base, q, blk.order);
    }
    return acc;
}

}  // namespace ellmac
