#include <catch2/catch_amalgamated.hpp>

#include "ellmac/qspecial.hpp"

using namespace ellmac;

namespace {

/* wide-index evaluation of the cyclic Nekrasov factor, scanning far past
 * the partition supports to confirm the production index ranges */
Rat cyclic_nekrasov_wide(long k, long N, const Partition& lam, const Partition& mu, const Rat& u,
                         const Rat& q, const Rat& kappa, long extra) {
    Rat acc(1);
    long jmax = lam.length() + extra;
    for (long j = 1; j <= jmax; ++j)
        for (long i = 1; i <= j; ++i) {
            if (((j - i - k) % N + N) % N != 0) continue;
            Rat base = u * rat_pow(q, -mu.part(i) + lam.part(j + 1)) * rat_pow(kappa, j - i);
            acc *= qpoch_finite(base, q, lam.part(j) - lam.part(j + 1));
        }
    long bmax = mu.length() + extra;
    for (long b = 1; b <= bmax; ++b)
        for (long a = 1; a <= b; ++a) {
            if (((b - a + k + 1) % N + N) % N != 0) continue;
            Rat base = u * rat_pow(q, lam.part(a) - mu.part(b)) * rat_pow(kappa, a - b - 1);
            acc *= qpoch_finite(base, q, mu.part(b) - mu.part(b + 1));
        }
    return acc;
}

}  // namespace

TEST_CASE("finite q-Pochhammer") {
    CHECK(qpoch_finite(rat(3, 4), rat(2, 5), 0) == 1);
    CHECK(qpoch_finite(rat(1, 2), rat(1, 3), 2) == rat(5, 12));
    auto r = make_ring({"m"}, 3);
    Series lin = qpoch_finite_series(r, rat(2, 3), {1}, rat(1, 2), 1);
    Series expect = Series::one(r);
    expect.add_term({1}, rat(-2, 3));
    CHECK(lin == expect);
}

TEST_CASE("Euler expansion of the infinite q-Pochhammer") {
    auto r = make_ring({"m"}, 2);
    CHECK(qpoch_infinite_series(r, Rat(0), {1}, rat(1, 2), 1) == Series::one(r));

    Series e = qpoch_infinite_series(r, Rat(1), {1}, rat(1, 2), 1);
    Series expect = Series::one(r);
    expect.add_term({1}, Rat(-2));
    expect.add_term({2}, rat(4, 3));
    CHECK(e == expect);

    // functional equation (cM;q)_inf = (1-cM)(cqM;q)_inf, checked at D=6
    auto r6 = make_ring({"m"}, 6);
    for (auto [cn, cd, qn, qd] : {std::array<long, 4>{2, 3, 1, 2}, {7, 5, 2, 7}, {-3, 4, 3, 5}}) {
        Rat c = rat(cn, cd), q = rat(qn, qd);
        Series lhs = qpoch_infinite_series(r6, c, {1}, q, 1);
        Series lin = Series::one(r6);
        lin.add_term({1}, -c);
        CHECK(lhs == lin * qpoch_infinite_series(r6, c * q, {1}, q, 1));
        // the sign=-1 branch is the reciprocal
        CHECK(lhs * qpoch_infinite_series(r6, c, {1}, q, -1) == Series::one(r6));
    }
}

TEST_CASE("theta series") {
    // ring of (y1, w) at N=2, alias p = w*y1
    auto r = make_ring({"y1", "w"}, 2, {{"p", Mono{1, 1}}});
    Mono P = r->alias("p");

    SECTION("positive-degree argument has constant term 1") {
        Series th = theta_p_series(r, rat(3, 7), {1, 0}, P);
        CHECK(th.constant_term() == 1);
    }
    SECTION("scalar argument has constant term 1-c") {
        Series th = theta_p_series(r, rat(3, 7), {0, 0}, P);
        CHECK(th.constant_term() == rat(4, 7));
    }
    SECTION("degree-0 truncation gives 1") {
        auto r0 = make_ring({"y1", "w"}, 0, {{"p", Mono{1, 1}}});
        Series th = theta_p_series(r0, rat(3, 7), {1, 0}, r0->alias("p"));
        CHECK(th == Series::one(r0));
    }
    SECTION("matches a wide brute-force product") {
        Rat c = rat(2, 9);
        Series th = theta_p_series(r, c, {1, 0}, P);
        Series brute = Series::one(r);
        for (long m = 0; m <= 5; ++m) {  // (c y1 p^m ; p)
            Series f = Series::one(r);
            f.add_term(Mono{static_cast<std::uint32_t>(1 + m), static_cast<std::uint32_t>(m)}, -c);
            brute = brute * f;
        }
        for (long m = 1; m <= 5; ++m) {  // (p^m / (c y1) ; p), p/y1 = w
            Series f = Series::one(r);
            f.add_term(Mono{static_cast<std::uint32_t>(m - 1), static_cast<std::uint32_t>(m)},
                       -Rat(1) / c);
            brute = brute * f;
        }
        CHECK(th == brute);
    }
    SECTION("inadmissible argument is rejected") {
        auto r3 = make_ring({"y1", "y2", "w"}, 2, {{"p", Mono{1, 1, 1}}});
        CHECK_THROWS_AS(theta_p_series(r3, rat(1, 2), {2, 0, 0}, r3->alias("p")), ring_error);
    }
}

TEST_CASE("elliptic shifted product") {
    auto r = make_ring({"y1", "w"}, 3, {{"p", Mono{1, 1}}});
    Mono P = r->alias("p");
    Rat q = rat(2, 5), c = rat(3, 11);

    CHECK(wg_bracket_series(r, c, {1, 0}, 0, q, P) == Series::one(r));
    CHECK(wg_bracket_series(r, c, {1, 0}, 1, q, P) == theta_p_series(r, c, {1, 0}, P));

    // at p-degree 0 (drop every w) the bracket reduces to (cM;q)_n
    for (long n = 1; n <= 4; ++n) {
        Series br = wg_bracket_series(r, c, {1, 0}, n, q, P);
        CHECK(slice_var_zero(br, 1) == qpoch_finite_series(r, c, {1, 0}, q, n));
    }
}

TEST_CASE("Nekrasov factor values") {
    Rat q = rat(2, 5), t = rat(3, 7), u = rat(7, 11);
    CHECK(nekrasov(Partition(), Partition(), u, q, t) == 1);
    CHECK(nekrasov(Partition({1}), Partition(), u, q, t) == Rat(1) - u);
    CHECK(nekrasov(Partition({1}), Partition({1}), u, q, t) ==
          (Rat(1) - u / q) * (Rat(1) - u * t));
    CHECK(nekrasov(Partition({1}), Partition({1}), u, q, t, 2) ==
          (Rat(1) - u / q) * (Rat(1) - u * t));
}

TEST_CASE("Nekrasov dual forms agree") {
    Rat q = rat(2, 5), t = rat(3, 7), u = rat(7, 11);
    auto ps = partitions_up_to(4);
    for (const auto& lam : ps)
        for (const auto& mu : ps)
            CHECK(nekrasov(lam, mu, u, q, t, 1) == nekrasov(lam, mu, u, q, t, 2));
}

TEST_CASE("containment criterion at u = 1") {
    Rat q = rat(2, 5), t = rat(3, 7);
    auto ps = partitions_up_to(5);
    for (const auto& nu : ps)
        for (const auto& rho : ps)
            CHECK((nekrasov(nu, rho, Rat(1), q, t) != 0) == nu.subset_of(rho));
}

TEST_CASE("c c' product identity") {
    Rat q = rat(2, 5), t = rat(3, 7);
    for (const Partition& lam : partitions_up_to(10)) {
        Rat lhs = c_factor(lam, q, t) * cprime_factor(lam, q, t);
        Rat sign = (lam.size() % 2) ? Rat(-1) : Rat(1);
        Rat rhs = sign * rat_pow(q, n_lambda(lam.conjugate()) + lam.size()) *
                  rat_pow(t, n_lambda(lam)) * nekrasov(lam, lam, Rat(1), q, t);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cyclic Nekrasov values") {
    Rat q = rat(2, 5), kappa = rat(9, 4), u = rat(7, 11);
    CHECK(nekrasov_cyclic(0, 1, Partition(), Partition(), u, q, kappa) == 1);
    CHECK(nekrasov_cyclic(0, 1, Partition({1}), Partition({1}), u, q, kappa) ==
          (Rat(1) - u / q) * (Rat(1) - u / kappa));
    CHECK(nekrasov_cyclic(0, 2, Partition({1}), Partition({1}), u, q, kappa) == Rat(1) - u / q);
}

TEST_CASE("cyclic Nekrasov matches the wide-index scan") {
    Rat q = rat(2, 5), kappa = rat(9, 4), u = rat(7, 11);
    auto ps = partitions_up_to(5);
    for (long N = 1; N <= 3; ++N)
        for (long k = 0; k < N; ++k)
            for (const auto& lam : ps)
                for (const auto& mu : ps) {
                    Rat fast = nekrasov_cyclic(k, N, lam, mu, u, q, kappa);
                    Rat wide = cyclic_nekrasov_wide(k, N, lam, mu, u, q, kappa, 2 * N + 3);
                    CHECK(fast == wide);
                }
}
