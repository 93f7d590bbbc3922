#include <doctest.h>

#include <algorithm>
#include <random>

#include "charpoly/partitions.hpp"

using namespace charpoly;

TEST_CASE("partition enumeration order and counts") {
    const auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4});
    CHECK((p4[1] == Partition{3, 1}));
    CHECK((p4[2] == Partition{2, 2}));
    CHECK((p4[3] == Partition{2, 1, 1}));
    CHECK((p4[4] == Partition{1, 1, 1, 1}));

    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(partitions_of(n).size() == static_cast<size_t>(expected[n]));

    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
}

TEST_CASE("partitions with bounded parts") {
    const auto p = partitions_of_max_part(5, 2);
    REQUIRE(p.size() == 3);
    CHECK((p[0] == Partition{2, 2, 1}));
    CHECK((p[1] == Partition{2, 1, 1, 1}));
    CHECK((p[2] == Partition{1, 1, 1, 1, 1}));

    // bounding by n itself changes nothing
    for (int n = 0; n <= 8; ++n) CHECK(partitions_of_max_part(n, n) == partitions_of(n));
}

TEST_CASE("validity, weight and length") {
    CHECK(is_valid_partition({}));
    CHECK(is_valid_partition({3, 1, 1}));
    CHECK_FALSE(is_valid_partition({1, 3}));
    CHECK_FALSE(is_valid_partition({2, 0}));
    CHECK(partition_weight({3, 1, 1}) == 5);
    CHECK(partition_length({3, 1, 1}) == 3);
}

TEST_CASE("centralizer orders z_lambda") {
    CHECK(z_of({}) == 1);
    CHECK(z_of({5}) == 5);
    CHECK(z_of({1, 1, 1, 1}) == 24);
    CHECK(z_of({2, 1, 1}) == 4);
    CHECK(z_of({2, 2}) == 8);
    CHECK(z_of({3, 2, 2, 1}) == 3 * 8 * 1);

    // conjugacy class sizes n!/z_lambda add up to n!
    for (int n = 1; n <= 10; ++n) {
        Rat total = 0;
        for (const auto& lam : partitions_of(n)) total += Rat(factorial(n)) / Rat(z_of(lam));
        CHECK(total == Rat(factorial(n)));
    }
}

TEST_CASE("part multiplicities") {
    const auto mult = part_multiplicities({3, 2, 2, 1});
    REQUIRE(mult.size() == 3);
    CHECK((mult[0] == std::pair<int, int>{3, 1}));
    CHECK((mult[1] == std::pair<int, int>{2, 2}));
    CHECK((mult[2] == std::pair<int, int>{1, 1}));
}

TEST_CASE("conjugation") {
    CHECK((conjugate({3, 1}) == Partition{2, 1, 1}));
    CHECK(conjugate({}) == Partition{});
    CHECK((conjugate({4}) == Partition{1, 1, 1, 1}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            CHECK(partition_weight(conjugate(lam)) == n);
            CHECK(conjugate(conjugate(lam)) == lam);
        }
}

TEST_CASE("permutations and cycle types") {
    CHECK((cycle_type(perm_identity(4)) == Partition{1, 1, 1, 1}));
    CHECK((cycle_type({1, 2, 0, 4, 3}) == Partition{3, 2}));
    CHECK(cycle_type({1, 0}) == Partition{2});

    std::mt19937 rng(20260817);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Perm a = perm_identity(n), b = perm_identity(n);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(n));
        CHECK(perm_compose(perm_inverse(a), a) == perm_identity(n));
        // cycle type is a class function: conjugation preserves it
        const Perm conj = perm_compose(b, perm_compose(a, perm_inverse(b)));
        CHECK(cycle_type(conj) == cycle_type(a));
    }
}
