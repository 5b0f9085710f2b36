#include <catch2/catch_amalgamated.hpp>

#include "ellmac/partition.hpp"

using namespace ellmac;

TEST_CASE("conjugate on small diagrams") {
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({3, 2}).conjugate() == Partition({2, 2, 1}));
    CHECK(Partition({1, 1, 1}).conjugate() == Partition({3}));
}

TEST_CASE("conjugate is an involution") {
    for (const Partition& lam : partitions_up_to(12)) CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("arm and leg lengths") {
    Partition lam({3, 2});
    CHECK(arm(lam, 1, 1) == 2);
    CHECK(leg(lam, 1, 1) == 1);
    CHECK(arm(Partition(), 1, 1) == -1);
    CHECK(leg(Partition(), 1, 1) == -1);
    Partition sq({2, 2});
    CHECK(arm(sq, 2, 2) == 0);
    CHECK(leg(sq, 2, 2) == 0);
}

TEST_CASE("cell count and the classical n identity") {
    for (const Partition& lam : partitions_up_to(12)) {
        long cells = 0;
        for (long i = 1; i <= lam.length(); ++i) cells += lam.part(i);
        CHECK(cells == lam.size());
        long rhs = 0;
        for (long i = 1; i <= lam.length(); ++i) {
            long p = lam.part(i);
            rhs += p * (p - 1) / 2;
        }
        CHECK(n_lambda(lam.conjugate()) == rhs);
    }
}

TEST_CASE("combinatorial scalars") {
    Rat q = rat(2, 5), t = rat(3, 7);
    CHECK(n_lambda(Partition({3, 2})) == 2);
    CHECK(c_factor(Partition(), q, t) == 1);
    CHECK(cprime_factor(Partition(), q, t) == 1);
    CHECK(f_factor(Partition(), q, t) == 1);
    CHECK(c_factor(Partition({1}), q, t) == Rat(1) - t);
    CHECK(cprime_factor(Partition({1}), q, t) == Rat(1) - q);
}

TEST_CASE("f factor") {
    // odd sizes need q/t to be a rational square
    Rat q = rat(1, 3), t = rat(4, 3);
    CHECK(f_factor(Partition({1}), q, t) == rat(-1, 2));
    Rat q2 = rat(2, 5), t2 = rat(3, 7);
    CHECK(f_factor(Partition({2}), q2, t2) == q2 * q2 / t2);
    CHECK(f_factor(Partition({1, 1}), q2, t2) == q2 / (t2 * t2));
    CHECK_THROWS_AS(f_factor(Partition({1}), q2, t2), param_error);
}

TEST_CASE("cyclic weights") {
    Partition lam({3, 2, 1});
    CHECK(cyclic_weight(lam, 0, 2) == 4);
    CHECK(cyclic_weight(lam, 1, 2) == 2);
    CHECK(cyclic_weight(Partition(), 0, 1) == 0);
    CHECK(cyclic_weight(Partition(), 3, 5) == 0);
    // the weights over one period partition |lambda|
    for (const Partition& p : partitions_up_to(8)) {
        for (long N = 1; N <= 4; ++N) {
            long total = 0;
            for (long i = 0; i < N; ++i) total += cyclic_weight(p, i, N);
            CHECK(total == p.size());
        }
    }
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_up_to(0).size() == 1);
    CHECK(partitions_up_to(3).size() == 7);  // p(0)+p(1)+p(2)+p(3) = 1+1+2+3
    auto of4 = partitions_of(4);
    REQUIRE(of4.size() == 5);
    CHECK(of4[0] == Partition({4}));
    CHECK(of4[1] == Partition({3, 1}));
    CHECK(of4[2] == Partition({2, 2}));
    CHECK(of4[3] == Partition({2, 1, 1}));
    CHECK(of4[4] == Partition({1, 1, 1, 1}));
}

TEST_CASE("tuple enumeration") {
    auto tuples = partition_tuples(2, 1);
    REQUIRE(tuples.size() == 3);
    CHECK(tuples[0] == std::vector<Partition>{Partition(), Partition()});
    CHECK(tuples[1] == std::vector<Partition>{Partition({1}), Partition()});
    CHECK(tuples[2] == std::vector<Partition>{Partition(), Partition({1})});
    // no duplicates, every tuple within the bound
    auto t3 = partition_tuples(3, 4);
    std::set<std::vector<Partition>> seen(t3.begin(), t3.end());
    CHECK(seen.size() == t3.size());
    for (const auto& t : t3) CHECK(tuple_size(t) <= 4);
}

TEST_CASE("text round trip") {
    CHECK(Partition({3, 2, 1}).to_string() == "3,2,1");
    CHECK(Partition().to_string() == "-");
    CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
    CHECK(Partition::parse("-") == Partition());
    CHECK_THROWS_AS(Partition({1, 2}), param_error);
}

TEST_CASE("subset relation") {
    CHECK(Partition({1}).subset_of(Partition({2, 1})));
    CHECK(!Partition({2, 1}).subset_of(Partition({1})));
    CHECK(Partition().subset_of(Partition()));
}
