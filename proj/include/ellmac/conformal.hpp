#pragma once

#include <array>
#include <vector>

#include "ellmac/partition.hpp"
#include "ellmac/report.hpp"

namespace ellmac {

/* Truncated power series in hbar with exact rational coefficients. */
class HbarSeries {
public:
    explicit HbarSeries(long R) : c_(static_cast<std::size_t>(R + 1)) {}

    static HbarSeries constant(long R, const Rat& v) {
        HbarSeries s(R);
        s.c_[0] = v;
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }

    const Rat& coeff(long k) const { return c_[static_cast<std::size_t>(k)]; }
    Rat& coeff(long k) { return c_[static_cast<std::size_t>(k)]; }

    friend HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
        HbarSeries r(a.order());
        for (long k = 0; k <= a.order(); ++k) r.coeff(k) = a.coeff(k) + b.coeff(k);
        return r;
    }

    friend HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) {
        HbarSeries r(a.order());
        for (long k = 0; k <= a.order(); ++k) r.coeff(k) = a.coeff(k) - b.coeff(k);
        return r;
    }

    friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
        HbarSeries r(a.order());
        for (long i = 0; i <= a.order(); ++i) {
            if (a.coeff(i) == 0) continue;
            for (long j = 0; i + j <= a.order(); ++j)
                r.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
        return r;
    }

    bool operator==(const HbarSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rat> c_;
};

/* e^{c hbar} truncated at order R. */
inline HbarSeries hbar_exp(const Rat& c, long R) {
    HbarSeries s(R);
    Rat term(1);
    s.coeff(0) = 1;
    for (long k = 1; k <= R; ++k) {
        term *= c;
        term /= k;
        s.coeff(k) = term;
    }
    return s;
}

/* N=2 conformal parameters: P_1 = -P_2 = P, P'_1 = -P'_2 = P', with
 * u', v' satisfying v'_i - u'_j = P'_i - P_j - alpha. */
struct ConformalParams {
    Rat b, P, Pp, alpha;
    std::array<Rat, 2> u_prime, v_prime;

    static ConformalParams simple(const Rat& b, const Rat& P, const Rat& Pp, const Rat& alpha) {
        ConformalParams cp{b, P, Pp, alpha, {}, {}};
        cp.u_prime = {P + alpha / 2, -P + alpha / 2};
        cp.v_prime = {Pp - alpha / 2, -Pp - alpha / 2};
        return cp;
    }

    /* same constraint, shifted by a global constant */
    static ConformalParams shifted(const Rat& b, const Rat& P, const Rat& Pp, const Rat& alpha,
                                   const Rat& shift) {
        ConformalParams cp = simple(b, P, Pp, alpha);
        for (auto& x : cp.u_prime) x += shift;
        for (auto& x : cp.v_prime) x += shift;
        return cp;
    }

    Rat P_at(long j) const { return j == 1 ? P : -P; }
    Rat Pp_at(long i) const { return i == 1 ? Pp : -Pp; }
};

/* The 4d bifundamental factor. */
inline Rat z_bif(const Rat& alpha, const Rat& Pp, const std::array<Partition, 2>& lam,
                 const Rat& P, const std::array<Partition, 2>& mu, const Rat& b) {
    Rat binv = Rat(1) / b;
    Rat acc(1);
    for (long i = 1; i <= 2; ++i)
        for (long j = 1; j <= 2; ++j) {
            Rat head = (i == 1 ? Pp : -Pp) - (j == 1 ? P : -P) - alpha;
            const Partition& li = lam[static_cast<std::size_t>(i - 1)];
            const Partition& mj = mu[static_cast<std::size_t>(j - 1)];
            Partition li_c = li.conjugate(), mj_c = mj.conjugate();
            for (long k = 1; k <= li.length(); ++k)
                for (long l = 1; l <= li.part(k); ++l)
                    acc *= head + binv * (li.part(k) - l + 1) - b * (mj_c.part(l) - k);
            for (long k = 1; k <= mj.length(); ++k)
                for (long l = 1; l <= mj.part(k); ++l)
                    acc *= head - binv * (mj.part(k) - l) + b * (li_c.part(l) - k + 1);
        }
    return acc;
}

/* The conformal limit of the Nekrasov factor product:
 *   prod_{i,j} N_{lam^i, mu^j}(q v_i / (t u_j))
 * with q = e^{hbar/b}, t = e^{-b hbar}, u_j = e^{u'_j hbar}, v_i =
 * e^{v'_i hbar} must vanish below hbar-order 2(|lam|+|mu|) and equal
 * Z_bif exactly at that order. */
inline VerificationReport nekrasov_hbar_limit(const std::array<Partition, 2>& lam,
                                              const std::array<Partition, 2>& mu,
                                              const ConformalParams& cp, long R) {
    VerificationReport rep;
    rep.identity = "hbar-limit";
    rep.params["lambda"] = lam[0].to_string() + "|" + lam[1].to_string();
    rep.params["mu"] = mu[0].to_string() + "|" + mu[1].to_string();
    long total = lam[0].size() + lam[1].size() + mu[0].size() + mu[1].size();
    long target = 2 * total;
    if (R < target + 1) R = target + 1;
    rep.degree = static_cast<int>(R);

    Rat binv = Rat(1) / cp.b;
    HbarSeries prod = HbarSeries::constant(R, Rat(1));
    for (long i = 1; i <= 2; ++i)
        for (long j = 1; j <= 2; ++j) {
            const Partition& li = lam[static_cast<std::size_t>(i - 1)];
            const Partition& mj = mu[static_cast<std::size_t>(j - 1)];
            Partition li_c = li.conjugate(), mj_c = mj.conjugate();
            Rat head = cp.v_prime[static_cast<std::size_t>(i - 1)] -
                       cp.u_prime[static_cast<std::size_t>(j - 1)];
            // second printed form of N: lambda cells then mu cells
            for (long k = 1; k <= li.length(); ++k)
                for (long l = 1; l <= li.part(k); ++l) {
                    Rat e = head + binv * (li.part(k) - l + 1) - cp.b * (mj_c.part(l) - k);
                    prod = prod * (HbarSeries::constant(R, Rat(1)) - hbar_exp(e, R));
                }
            for (long k = 1; k <= mj.length(); ++k)
                for (long l = 1; l <= mj.part(k); ++l) {
                    Rat e = head - binv * (mj.part(k) - l) + cp.b * (li_c.part(l) - k + 1);
                    prod = prod * (HbarSeries::constant(R, Rat(1)) - hbar_exp(e, R));
                }
        }

    for (long k = 0; k < target; ++k) {
        ++rep.coefficients_compared;
        if (prod.coeff(k) != 0) {
            rep.record_mismatch("order deficit at hbar^" + std::to_string(k), prod.coeff(k),
                                Rat(0));
            return rep;
        }
    }
    Rat expect = z_bif(cp.alpha, cp.Pp, lam, cp.P, mu, cp.b);
    ++rep.coefficients_compared;
    if (prod.coeff(target) != expect)
        rep.record_mismatch("coefficient mismatch at hbar^" + std::to_string(target),
                            prod.coeff(target), expect);
    return rep;
}

}  // namespace ellmac
