#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "nearcentral/permutation.hpp"

using namespace nearcentral;
using test_helpers::mp;

namespace {

// Partitions of n with parts at most k: p(n, k) = p(n, k-1) + p(n-k, k).
long count_partitions(int n, int k) {
    if (n == 0) return 1;
    if (n < 0 || k == 0) return 0;
    return count_partitions(n, k - 1) + count_partitions(n - k, k);
}

}  // namespace

TEST_CASE("enumerate_partitions small cases") {
    CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK(enumerate_partitions(5).size() == 7);
}

TEST_CASE("enumerate_partitions matches the counting recursion and is strictly decreasing") {
    for (int n = 1; n <= 14; ++n) {
        auto all = enumerate_partitions(n);
        CHECK(static_cast<long>(all.size()) == count_partitions(n, n));
        for (std::size_t k = 0; k + 1 < all.size(); ++k) CHECK(all[k] > all[k + 1]);
        for (const auto& p : all) CHECK(p.size() == n);
    }
}

TEST_CASE("enumerate_marked_partitions") {
    CHECK(enumerate_marked_partitions(3) ==
          std::vector<MarkedPartition>{mp({3}, 3), mp({2, 1}, 2), mp({2, 1}, 1), mp({1, 1, 1}, 1)});
    CHECK(enumerate_marked_partitions(2) == std::vector<MarkedPartition>{mp({2}, 2), mp({1, 1}, 1)});
    CHECK(enumerate_marked_partitions(5).size() == 12);
}

TEST_CASE("part surgery") {
    CHECK(remove_part({2, 1}, 1) == Partition{2});
    CHECK(remove_part({2, 2, 1}, 2) == Partition{2, 1});
    CHECK_THROWS_AS(remove_part({3}, 2), DomainError);
    CHECK(add_part({2, 1}, 3) == Partition{3, 2, 1});
    CHECK(add_part(Partition{}, 1) == Partition{1});
    CHECK(add_part({2, 1}, 1) == Partition{2, 1, 1});
    CHECK(decrement_part({2, 1}, 2) == Partition{1, 1});
    CHECK(decrement_part({2, 1}, 1) == Partition{2});
    CHECK(decrement_part({3}, 3) == Partition{2});
    CHECK_THROWS_AS(decrement_part({3}, 1), DomainError);
}

TEST_CASE("class sizes") {
    CHECK(class_size({1, 1, 1}) == 1);
    CHECK(class_size({3}) == 2);
    CHECK(class_size({2, 1}) == 3);
    CHECK(marked_class_size({2, 1}, 2) == 2);
    for (int n = 1; n <= 8; ++n) {
        CHECK(marked_class_size({n}, n) == factorial(n - 1));
        CHECK(marked_class_size(Partition::repeated(1, n), 1) == 1);
    }
    CHECK_THROWS_AS(marked_class_size({2, 1}, 3), DomainError);
}

TEST_CASE("class sizes agree with bucketing S_n") {
    for (int n = 1; n <= 6; ++n) {
        std::map<MarkedPartition, long> seen;
        for (const auto& p : all_permutations(n)) ++seen[p.marked_type()];
        CHECK(seen.size() == enumerate_marked_partitions(n).size());
        for (const auto& [m, count] : seen) CHECK(marked_class_size(m) == count);
    }
}

TEST_CASE("class sizes sum to n!") {
    for (int n = 1; n <= 8; ++n) {
        Integer plain = 0, marked = 0;
        for (const auto& p : enumerate_partitions(n)) plain += class_size(p);
        for (const auto& m : enumerate_marked_partitions(n)) marked += marked_class_size(m);
        CHECK(plain == factorial(n));
        CHECK(marked == factorial(n));
    }
}

TEST_CASE("parsing and validation") {
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK_THROWS_AS(Partition::parse("1,2"), DomainError);
    CHECK_THROWS_AS(Partition::parse("2,0"), DomainError);
    CHECK_THROWS_AS(Partition::parse("a"), DomainError);
    CHECK(MarkedPartition::parse("3,1@1") == mp({3, 1}, 1));
    CHECK(mp({3, 1}, 1).to_string() == "3,1@1");
    CHECK_THROWS_AS(mp({3, 1}, 2), DomainError);
    CHECK(mp({2, 1}, 1) != mp({2, 1}, 2));
}

TEST_CASE("partition queries") {
    Partition p{4, 2, 2, 1};
    CHECK(p.size() == 9);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.distinct_parts() == std::vector<int>{4, 2, 1});
    CHECK(Partition({3, 1, 1}).is_hook());
    CHECK_FALSE(p.is_hook());
    CHECK(Partition::repeated(1, 3) == Partition{1, 1, 1});
}
