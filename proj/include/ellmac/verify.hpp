#pragma once

#include <random>

#include "ellmac/conformal.hpp"
#include "ellmac/functions.hpp"
#include "ellmac/macdonald.hpp"
#include "ellmac/report.hpp"

namespace ellmac {

namespace detail {

inline void echo_params(VerificationReport& rep, const ParamSet& p) {
    rep.params["n"] = std::to_string(p.N);
    rep.params["q"] = rat_text(p.q);
    rep.params["tau"] = rat_text(p.tau);
    rep.params["kappa0"] = rat_text(p.kappa0);
    std::string sv;
    for (std::size_t i = 0; i < p.s.size(); ++i) sv += (i ? "," : "") + rat_text(p.s[i]);
    rep.params["s"] = sv;
}

template <typename Fn>
VerificationReport guarded(const std::string& identity, Fn&& fn) {
    VerificationReport rep;
    rep.identity = identity;
    try {
        fn(rep);
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.error_message = e.what();
    }
    return rep;
}

}  // namespace detail

/* -------------------------------------------------------------------
 * Main transformation: the shifted non-stationary build against the
 * prefactor times the elliptic lift, every (y,w,sigma)-coefficient.
 * ----------------------------------------------------------------- */
inline VerificationReport verify_theorem_main(long N, int D, const ParamSet& p) {
    return detail::guarded("thm-main", [&](VerificationReport& rep) {
        detail::echo_params(rep, p);
        rep.params["n"] = std::to_string(N);
        rep.degree = D;
        p.check_generic();
        auto ring = ring_yws(N, D);
        Series lhs = f_ghat_shifted(ring, N, D, p.q, p.tau);
        Series rhs = prefactor_C(ring, N, p.q, p.t()) * f_ellip_sigma(ring, N, p.q, p.t());
        compare_all_coefficients(lhs, rhs, rep);
    });
}

/* -------------------------------------------------------------------
 * The N=1 summation formula, p-coefficients through p^D.  The printed
 * right-hand side and the kappa-inverted reading are both available;
 * exactly one is expected to validate.
 * ----------------------------------------------------------------- */
inline Series n1_lhs(const Ring& ring, int D, const Rat& q, const Rat& t, const Rat& kappa) {
    Series arg = Series::zero(ring);
    for (long n = 1; n <= D; ++n) {
        Rat dq = Rat(1) - rat_pow(q, n), dt = Rat(1) - rat_pow(t, -n);
        if (dq == 0 || dt == 0) throw param_error("non-generic parameters in n1 sum");
        Rat c = (Rat(1) - rat_pow(q * kappa, n)) * (Rat(1) - rat_pow(kappa / t, n)) *
                rat_pow(kappa, -n) / (Rat(n) * dq * dt);
        for (long m = 0; n * (m + 1) <= D; ++m)
            arg.add_term({static_cast<std::uint32_t>(n * (m + 1))}, c);
    }
    return exp_series(arg);
}

inline Series n1_rhs(const Ring& ring, int D, const Rat& q, const Rat& t, const Rat& kappa,
                     bool kappa_inverted) {
    Rat kap = kappa_inverted ? Rat(1) / kappa : kappa;
    Series total = Series::zero(ring);
    enumerate_partitions(D, [&](const Partition& lam) {
        Rat coeff(1);
        for (long j = 1; j <= lam.length(); ++j) {
            long order = lam.part(j) - lam.part(j + 1);
            if (order == 0) continue;
            for (long i = 1; i <= j; ++i) {
                Rat a1 = rat_pow(q, -lam.part(i) + lam.part(j + 1)) * rat_pow(t, i - j);
                Rat a2 = rat_pow(q, lam.part(i) - lam.part(j)) * rat_pow(t, -i + j + 1);
                Rat den = qpoch_finite(a1, q, order) * qpoch_finite(a2, q, order);
                if (den == 0) throw param_error("non-generic parameters: vanishing Pochhammer");
                coeff *= qpoch_finite(kap * a1, q, order) * qpoch_finite(kap * a2, q, order) / den;
            }
        }
        coeff *= rat_pow(Rat(1) / kap, lam.size());  // (p/kappa)^{|lambda|} prefactor
        total.add_term({static_cast<std::uint32_t>(lam.size())}, coeff);
    });
    return total;
}

inline VerificationReport verify_n1(int D, const Rat& q, const Rat& t, const Rat& kappa,
                                    bool kappa_inverted) {
    std::string id = kappa_inverted ? "n1/kappa-inverted" : "n1/printed";
    return detail::guarded(id, [&](VerificationReport& rep) {
        rep.params["q"] = rat_text(q);
        rep.params["t"] = rat_text(t);
        rep.params["kappa"] = rat_text(kappa);
        rep.params["convention"] = kappa_inverted ? "kappa-inverted" : "printed";
        rep.degree = D;
        auto ring = make_ring({"p"}, D);
        Series lhs = n1_lhs(ring, D, q, t, kappa);
        Series rhs = n1_rhs(ring, D, q, t, kappa, kappa_inverted);
        compare_all_coefficients(lhs, rhs, rep);
    });
}

/* -------------------------------------------------------------------
 * Cyclic-slice Nekrasov identity: for random lambda and each residue
 * class decomposition mu^{(k)} = (lambda_j : i-j = k mod N),
 *   prod_k N_{mu^{(k-1)},mu^{(k)}}(t^{d_{k,i}}) / N_{mu^{(k)},mu^{(k)}}(1)
 * equals the cyclic N^{(0|N)}_{lam lam}(t)/N^{(0|N)}_{lam lam}(1) at
 * kappa = tau^{-1}; the two sides are fully independent code paths.
 * ----------------------------------------------------------------- */
inline VerificationReport verify_lemma_nek(long samples, const std::vector<long>& Ns,
                                           std::uint64_t seed, const Rat& q, const Rat& tau) {
    return detail::guarded("lemma-nek", [&](VerificationReport& rep) {
        rep.params["q"] = rat_text(q);
        rep.params["tau"] = rat_text(tau);
        rep.params["seed"] = std::to_string(seed);
        rep.params["samples"] = std::to_string(samples);
        std::mt19937_64 rng(seed);
        for (long N : Ns) {
            Rat t = rat_pow(tau, N);
            Rat kappa = Rat(1) / tau;
            for (long i = 1; i <= N; ++i) {
                for (long trial = 0; trial < samples; ++trial) {
                    long sz = static_cast<long>(rng() % 9);  // |lambda| <= 8
                    auto pool = partitions_of(sz);
                    const Partition& lam = pool[rng() % pool.size()];

                    std::vector<Partition> mu(static_cast<std::size_t>(N + 1));
                    for (long k = 1; k <= N; ++k) {
                        std::vector<long> parts;
                        for (long j = 1; j <= lam.length(); ++j)
                            if (((i - j - k) % N + N) % N == 0) parts.push_back(lam.part(j));
                        mu[static_cast<std::size_t>(k)] = Partition(std::move(parts));
                    }
                    mu[0] = mu[static_cast<std::size_t>(N)];

                    Rat lhs(1);
                    for (long k = 1; k <= N; ++k) {
                        Rat den = nekrasov(mu[static_cast<std::size_t>(k)],
                                           mu[static_cast<std::size_t>(k)], Rat(1), q, t);
                        if (den == 0) throw param_error("vanishing denominator in slice product");
                        lhs *= nekrasov(mu[static_cast<std::size_t>(k - 1)],
                                        mu[static_cast<std::size_t>(k)],
                                        (k == i) ? t : Rat(1), q, t) /
                               den;
                    }
                    Rat rden = nekrasov_cyclic(0, N, lam, lam, Rat(1), q, kappa);
                    if (rden == 0) throw param_error("vanishing cyclic denominator");
                    Rat rhs = nekrasov_cyclic(0, N, lam, lam, t, q, kappa) / rden;

                    ++rep.coefficients_compared;
                    if (lhs != rhs)
                        rep.record_mismatch("N=" + std::to_string(N) + " i=" + std::to_string(i) +
                                                " lambda=" + lam.to_string(),
                                            lhs, rhs);
                }
            }
        }
    });
}

/* -------------------------------------------------------------------
 * p -> 0 degeneration: the w-degree-0 slice of the shifted build at
 * generic kappa equals f^{gl_N}(x;s|q,q/t).
 * ----------------------------------------------------------------- */
inline VerificationReport verify_p_limit(long N, int D, const Rat& q, const Rat& t,
                                         const Rat& kappa0, const std::vector<Rat>& s) {
    return detail::guarded("p-limit", [&](VerificationReport& rep) {
        rep.params["n"] = std::to_string(N);
        rep.params["q"] = rat_text(q);
        rep.params["kappa0"] = rat_text(kappa0);
        rep.degree = D;
        auto ring = ring_yw(N, D);
        Series shifted = f_ghat_p_shifted(ring, N, D, q, t, kappa0, s);
        Series sliced = slice_var_zero(shifted, static_cast<std::size_t>(N - 1));
        Series target = f_gln(ring, N, q, q / t, numeric_ratio(ring, s),
                              [&](long i, long j) { return ratio_mono(ring, i, j, 0); });
        compare_all_coefficients(sliced, target, rep);
    });
}

inline VerificationReport verify_eigen(long N, int D, const Rat& q, const Rat& t,
                                       const std::vector<Rat>& s) {
    return detail::guarded("eigen", [&](VerificationReport& rep) {
        rep.params["n"] = std::to_string(N);
        rep.params["q"] = rat_text(q);
        rep.params["t"] = rat_text(t);
        rep.degree = D;
        Series resid = eigen_residual(N, D, q, t, s);
        for_each_mono(resid.ring(), [&](const Mono& m) {
            ++rep.coefficients_compared;
            Rat c = resid.coeff(m);
            if (c != 0) rep.record_mismatch(mono_text(resid.ring(), m), c, Rat(0));
        });
    });
}

inline VerificationReport verify_bispectral(long N, int D, const Rat& q, const Rat& t) {
    return detail::guarded("bispectral", [&](VerificationReport& rep) {
        rep = check_bispectral(N, D, q, t);
        rep.params["n"] = std::to_string(N);
        rep.params["q"] = rat_text(q);
        rep.params["t"] = rat_text(t);
    });
}

inline VerificationReport verify_poincare(long N, int D, const Rat& q, const Rat& t,
                                          const std::vector<Rat>& s) {
    return detail::guarded("poincare", [&](VerificationReport& rep) {
        rep = check_poincare(N, D, q, t, s);
        rep.params["n"] = std::to_string(N);
        rep.params["q"] = rat_text(q);
        rep.params["t"] = rat_text(t);
        if (rep.status == "error") throw param_error(rep.error_message);
    });
}

/* specialization with automatic truncation: degree = needed + slack */
inline VerificationReport verify_specialization(const Partition& lam, long N, const Rat& q,
                                                const Rat& t, int slack = 2) {
    return detail::guarded("spec-macdonald", [&](VerificationReport& rep) {
        long needed = 0;
        for (const auto& [v, c] : macdonald_oracle(lam, N, q, t)) {
            long deg = 0, e = 0;
            for (long j = 1; j <= N; ++j) {
                e += lam.part(j) - v[static_cast<std::size_t>(j - 1)];
                deg += e;
            }
            needed = std::max(needed, deg);
        }
        rep = check_specialization(lam, N, static_cast<int>(needed) + slack, q, t);
        rep.params["n"] = std::to_string(N);
        if (rep.status == "error") throw param_error(rep.error_message);
    });
}

/* both printed product forms of the Nekrasov factor */
inline VerificationReport verify_nek_forms(long max_size, const Rat& q, const Rat& t,
                                           const Rat& u) {
    return detail::guarded("nek-forms", [&](VerificationReport& rep) {
        rep.params["q"] = rat_text(q);
        rep.params["t"] = rat_text(t);
        rep.params["u"] = rat_text(u);
        rep.params["max_size"] = std::to_string(max_size);
        auto ps = partitions_up_to(max_size);
        for (const auto& lam : ps)
            for (const auto& mu : ps) {
                ++rep.coefficients_compared;
                Rat a = nekrasov(lam, mu, u, q, t, 1);
                Rat b = nekrasov(lam, mu, u, q, t, 2);
                if (a != b)
                    rep.record_mismatch(lam.to_string() + " ; " + mu.to_string(), a, b);
            }
    });
}

/* conformal limit over all N=2 partition pairs up to a total size */
inline VerificationReport verify_hbar_limit(long max_total, const Rat& b, const Rat& P,
                                            const Rat& Pp, const Rat& alpha,
                                            bool alternative_parametrization) {
    return detail::guarded("hbar-limit", [&](VerificationReport& rep) {
        rep.params["b"] = rat_text(b);
        rep.params["P"] = rat_text(P);
        rep.params["Pprime"] = rat_text(Pp);
        rep.params["alpha"] = rat_text(alpha);
        rep.params["parametrization"] = alternative_parametrization ? "shifted" : "simple";
        ConformalParams cp = alternative_parametrization
                                 ? ConformalParams::shifted(b, P, Pp, alpha, rat(5, 4))
                                 : ConformalParams::simple(b, P, Pp, alpha);
        auto tuples = partition_tuples(2, max_total);
        for (const auto& lt : tuples)
            for (const auto& mt : tuples) {
                long total = tuple_size(lt) + tuple_size(mt);
                if (total > max_total) continue;
                std::array<Partition, 2> la{lt[0], lt[1]}, mu{mt[0], mt[1]};
                auto sub = nekrasov_hbar_limit(la, mu, cp, 2 * total + 1);
                rep.coefficients_compared += sub.coefficients_compared;
                if (!sub.passed())
                    rep.record_mismatch(sub.params.at("lambda") + " ; " + sub.params.at("mu") +
                                            " " + sub.mismatch_at,
                                        rat_parse(sub.lhs_value), rat_parse(sub.rhs_value));
            }
    });
}

}  // namespace ellmac
