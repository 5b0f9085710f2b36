#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ellmac/series.hpp"

using namespace ellmac;

namespace {

Ring yring(int D) { return make_ring({"y"}, D); }

Series var(const Ring& r, std::size_t i, const Rat& c = Rat(1)) {
    Mono m = r->unit();
    m[i] = 1;
    return Series::term(r, m, c);
}

/* series log, independent of exp_series: log(1+u) = sum (-1)^{k+1} u^k / k */
Series log_series(const Series& a) {
    Series u = a - Series::one(a.ring());
    REQUIRE(u.constant_term() == 0);
    Series acc = Series::zero(a.ring());
    Series pw = Series::one(a.ring());
    for (int k = 1; k <= a.ring()->degree; ++k) {
        pw = pw * u;
        if (pw.is_zero()) break;
        acc = acc + scale(pw, Rat(k % 2 ? 1 : -1) / Rat(k));
    }
    return acc;
}

Series random_series(const Ring& r, std::mt19937_64& rng, bool unit) {
    Series s = unit ? Series::constant(r, Rat(1 + static_cast<long>(rng() % 3)))
                    : Series::zero(r);
    // every monomial of positive degree gets a small random coefficient
    std::vector<Mono> monos;
    std::function<void(Mono&, std::size_t, long)> gen = [&](Mono& m, std::size_t i, long rem) {
        if (i == m.size()) {
            if (mono_degree(m) > 0) monos.push_back(m);
            return;
        }
        for (long e = 0; e <= rem; ++e) {
            m[i] = static_cast<std::uint32_t>(e);
            gen(m, i + 1, rem - e);
        }
        m[i] = 0;
    };
    Mono m = r->unit();
    gen(m, 0, r->degree);
    for (const auto& mo : monos) {
        long num = static_cast<long>(rng() % 7) - 3;
        long den = 1 + static_cast<long>(rng() % 4);
        s.add_term(mo, rat(num, den));
    }
    return s;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    auto r = yring(4);
    Series y = var(r, 0);
    Series one = Series::one(r);
    CHECK((one + y) * (one - y) == one - y * y);
    Series s = one + scale(y, rat(2, 3));
    CHECK(s + Series::zero(r) == s);
}

TEST_CASE("multiplication truncates by total degree") {
    auto r = yring(2);
    Series y = var(r, 0);
    Series a = Series::one(r) + y + y * y;
    Series b = Series::one(r) + y;
    Series expect = Series::one(r);
    expect.add_term({1}, Rat(2));
    expect.add_term({2}, Rat(2));
    CHECK(a * b == expect);
}

TEST_CASE("invert_unit") {
    auto r3 = yring(3);
    Series y = var(r3, 0);
    Series inv = invert_unit(Series::one(r3) - y);
    Series expect = Series::one(r3);
    expect.add_term({1}, Rat(1));
    expect.add_term({2}, Rat(1));
    expect.add_term({3}, Rat(1));
    CHECK(inv == expect);

    CHECK(invert_unit(Series::one(r3)) == Series::one(r3));

    auto r2 = yring(2);
    Series g = Series::constant(r2, Rat(2)) - var(r2, 0);
    Series ginv = invert_unit(g);
    Series want = Series::constant(r2, rat(1, 2));
    want.add_term({1}, rat(1, 4));
    want.add_term({2}, rat(1, 8));
    CHECK(ginv == want);
    CHECK(g * ginv == Series::one(r2));

    CHECK_THROWS_AS(invert_unit(var(r2, 0)), ring_error);
}

TEST_CASE("exp and log") {
    auto r = yring(2);
    CHECK(exp_series(Series::zero(r)) == Series::one(r));
    Series e = exp_series(var(r, 0));
    Series expect = Series::one(r);
    expect.add_term({1}, Rat(1));
    expect.add_term({2}, rat(1, 2));
    CHECK(e == expect);

    auto r4 = yring(4);
    Series a = scale(var(r4, 0), Rat(3));
    a.add_term({2}, Rat(5));
    CHECK(log_series(exp_series(a)) == a);
    CHECK_THROWS_AS(exp_series(Series::one(r4)), ring_error);
}

TEST_CASE("expand_linear_factor") {
    auto r = make_ring({"s"}, 2);

    auto [p1, s1] = expand_linear_factor(r, Rat(3), {1}, -1);
    CHECK(p1.scalar == 1);
    CHECK(p1.expo == std::vector<long>{0});
    Series geo = Series::one(r);
    geo.add_term({1}, Rat(3));
    geo.add_term({2}, Rat(9));
    CHECK(s1 == geo);

    auto [p2, s2] = expand_linear_factor(r, Rat(2), {-1}, 1);
    CHECK(p2.scalar == Rat(-2));
    CHECK(p2.expo == std::vector<long>{-1});
    Series res = Series::one(r);
    res.add_term({1}, rat(-1, 2));
    CHECK(s2 == res);

    auto r1 = make_ring({"s"}, 1);
    auto [p3, s3] = expand_linear_factor(r1, Rat(2), {-1}, -1);
    CHECK(p3.scalar == rat(-1, 2));
    CHECK(p3.expo == std::vector<long>{1});
    Series res3 = Series::one(r1);
    res3.add_term({1}, rat(1, 2));
    CHECK(s3 == res3);

    CHECK_THROWS_AS(expand_linear_factor(r, Rat(0), {-1}, 1), ring_error);
}

TEST_CASE("finalize") {
    auto r = make_ring({"s"}, 2);
    LaurentPrefix a{Rat(-2), {-1}};
    LaurentPrefix b{rat(-1, 2), {1}};
    CHECK(finalize(r, {a, b}, {Series::one(r)}) == Series::one(r));
    CHECK(finalize(r, {}, {}) == Series::one(r));
    LaurentPrefix c{Rat(1), {1}};
    CHECK_THROWS_AS(finalize(r, {c}, {}), ring_error);
}

TEST_CASE("ring mismatch is detected") {
    auto a = yring(3), b = yring(4);
    CHECK_THROWS_AS(Series::one(a) + Series::one(b), ring_error);
    CHECK_THROWS_AS(Series::one(a) * Series::one(b), ring_error);
}

TEST_CASE("ring axioms on random series") {
    auto r = make_ring({"u", "v"}, 5);
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        Series a = random_series(r, rng, false);
        Series b = random_series(r, rng, false);
        Series c = random_series(r, rng, false);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("invert_unit composes with mul to the identity") {
    auto r = make_ring({"u", "v"}, 4);
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        Series a = random_series(r, rng, true);
        CHECK(a * invert_unit(a) == Series::one(r));
    }
}

TEST_CASE("term accumulation order does not matter") {
    auto r = make_ring({"u", "v"}, 4);
    std::mt19937_64 rng(99);
    Series a = random_series(r, rng, true);
    std::vector<std::pair<Mono, Rat>> entries(a.terms().begin(), a.terms().end());
    for (int perm = 0; perm < 5; ++perm) {
        std::shuffle(entries.begin(), entries.end(), rng);
        Series rebuilt(r);
        for (const auto& [m, c] : entries) rebuilt.add_term(m, c);
        CHECK(rebuilt == a);
        CHECK(series_text(rebuilt) == series_text(a));
    }
}

TEST_CASE("canonical text form") {
    auto r = make_ring({"y", "w"}, 2);
    Series s = Series::one(r);
    s.add_term({1, 1}, rat(-3, 5));
    CHECK(series_text(s) == "vars y w degree 2\n0 0 : 1/1\n1 1 : -3/5\n");
}
