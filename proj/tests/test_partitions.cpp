#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "partdist/partitions.hpp"

using namespace partdist;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

} // namespace

TEST_CASE("partitions of 5 come out in reverse-lexicographic order")
{
    const std::vector<Partition> expected = {P({5}),       P({4, 1}),       P({3, 2}),         P({3, 1, 1}),
                                             P({2, 2, 1}), P({2, 1, 1, 1}), P({1, 1, 1, 1, 1})};
    CHECK(all_partitions(5) == expected);
}

TEST_CASE("zero has exactly the empty partition")
{
    const auto parts = all_partitions(0);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].length() == 0);
    CHECK(parts[0].size() == 0);
    CHECK(parts[0].to_string() == "()");
}

TEST_CASE("partition counts match the pentagonal recurrence")
{
    const auto p = testing::partition_numbers(25);
    CHECK(p[20] == 627);
    for (int n = 0; n <= 25; ++n) {
        std::int64_t count = 0;
        for_each_partition(n, [&](std::span<const int>) { ++count; });
        CHECK_MESSAGE(count == p[static_cast<std::size_t>(n)], "n = " << n);
    }
}

TEST_CASE("enumeration agrees with an independent recursive enumerator")
{
    for (int n = 0; n <= 15; ++n) {
        std::set<std::vector<int>> reference;
        for (auto parts : testing::ascending_partitions(n)) {
            std::reverse(parts.begin(), parts.end());
            reference.insert(parts);
        }
        std::set<std::vector<int>> produced;
        Partition previous;
        bool first = true;
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(p.size() == n);
            CHECK(produced.insert(p.parts()).second);
            if (!first) {
                CHECK(ReverseLexOrder{}(previous, p));
            }
            previous = p;
            first = false;
        }
        CHECK(produced == reference);
    }
}

TEST_CASE("partition validation")
{
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
    CHECK(P({3, 1, 1}).multiplicity(1) == 2);
    CHECK(P({3, 1, 1}).multiplicity(2) == 0);
}

TEST_CASE("multiplicity vectors of partitions of 5")
{
    CHECK(to_multiplicity(P({3, 1, 1})).counts() == std::vector<int>{2, 0, 1, 0, 0});
    CHECK(to_multiplicity(P({5})).counts() == std::vector<int>{0, 0, 0, 0, 1});
    CHECK(to_multiplicity(P({1, 1, 1, 1, 1})).counts() == std::vector<int>{5, 0, 0, 0, 0});
    CHECK(from_multiplicity(MultiplicityVector({1, 2, 0, 0, 0})) == P({2, 2, 1}));
    CHECK(from_multiplicity(MultiplicityVector(std::vector<int>{})) == Partition());
}

TEST_CASE("multiplicity vectors with the wrong weighted sum are rejected")
{
    CHECK_THROWS_AS(MultiplicityVector({1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MultiplicityVector({-1, 1, 0}), std::invalid_argument);
}

TEST_CASE("multiplicity round trip")
{
    for (int n = 0; n <= 15; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(from_multiplicity(to_multiplicity(p)) == p);
        }
    }
    CHECK(all_partitions(8).size() == 22);
}

TEST_CASE("partition vectors")
{
    CHECK(to_partition_vector(P({4, 1})).entries() == std::vector<int>{4, 1, 0, 0, 0});
    CHECK(to_partition_vector(P({1, 1, 1, 1, 1})).entries() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(to_partition_vector(Partition()).entries().empty());
    CHECK_THROWS_AS(PartitionVector({1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PartitionVector({2, 0, 0}), std::invalid_argument);
}

TEST_CASE("deleting a part")
{
    CHECK(delete_part(P({3, 2}), 2) == P({3}));
    CHECK(delete_part(P({2, 2, 1}), 2) == P({2, 1}));
    CHECK_THROWS_AS(delete_part(P({3, 2}), 1), std::invalid_argument);
    CHECK(insert_part(P({3, 1}), 2) == P({3, 2, 1}));

    int containing_four = 0;
    for (const Partition& p : enumerate_partitions(9)) {
        containing_four += p.contains(4) ? 1 : 0;
    }
    CHECK(containing_four == 7);
    CHECK(all_partitions(5).size() == 7);
}

TEST_CASE("deleting part i is a bijection onto the partitions of n - i")
{
    for (int n = 1; n <= 15; ++n) {
        for (int i = 1; i <= n; ++i) {
            std::set<std::vector<int>> image;
            std::size_t domain = 0;
            for (const Partition& p : enumerate_partitions(n)) {
                if (!p.contains(i)) {
                    continue;
                }
                ++domain;
                const Partition mu = delete_part(p, i);
                CHECK(mu.size() == n - i);
                CHECK(insert_part(mu, i) == p);
                image.insert(mu.parts());
            }
            std::set<std::vector<int>> target;
            for (const Partition& q : enumerate_partitions(n - i)) {
                target.insert(q.parts());
            }
            CHECK(image.size() == domain);
            CHECK(image == target);
        }
    }
}

TEST_CASE("cycle type counts for S_3")
{
    CHECK(count_permutations_of_type(P({3})) == 2);
    CHECK(count_permutations_of_type(P({2, 1})) == 3);
    CHECK(count_permutations_of_type(P({1, 1, 1})) == 1);
    CHECK(count_permutations_of_type(Partition()) == 1);
}

TEST_CASE("cycle type counts sum to n!")
{
    for (int n = 0; n <= 15; ++n) {
        BigInt total = 0;
        for (const Partition& p : enumerate_partitions(n)) {
            total += count_permutations_of_type(p);
        }
        CHECK(total == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("cycle type counts match a census of all permutations")
{
    for (int n = 1; n <= 7; ++n) {
        const auto census = testing::cycle_type_census(n);
        CHECK(census.size() == all_partitions(n).size());
        for (const auto& [parts, count] : census) {
            CHECK(count_permutations_of_type(P(parts)) == count);
        }
    }
}
