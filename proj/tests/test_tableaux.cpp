#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "nearcentral/tableaux.hpp"

using namespace nearcentral;

namespace {

// Independent count: fill symbols 1..n in every way and keep the standard fillings.
long brute_force_syt(const Partition& shape) {
    const int n = shape.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        std::vector<std::vector<int>> rows;
        std::size_t at = 0;
        for (int len : shape.parts()) {
            rows.emplace_back(perm.begin() + static_cast<long>(at), perm.begin() + static_cast<long>(at + len));
            at += static_cast<std::size_t>(len);
        }
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r) {
            for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
                if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) ok = false;
                if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] > rows[r + 1][c]) ok = false;
            }
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("enumerate_syt small cases") {
    CHECK(enumerate_syt({2, 1}).size() == 2);
    CHECK(enumerate_syt({4}).size() == 1);
    CHECK(enumerate_syt({2, 2}).size() == 2);
    CHECK(enumerate_syt({2, 2}).size() == static_cast<std::size_t>(brute_force_syt({2, 2})));
    for (const auto& t : enumerate_syt({3, 2, 1})) CHECK(t.shape() == Partition{3, 2, 1});
}

TEST_CASE("SYT counts agree with brute force through n = 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            CAPTURE(p.to_string());
            CHECK(static_cast<long>(enumerate_syt(p).size()) == brute_force_syt(p));
        }
    }
}

TEST_CASE("dimension") {
    CHECK(dimension({2, 1}) == 2);
    CHECK(dimension({3, 2}) == 5);
    for (int n = 1; n <= 10; ++n) {
        for (int k = 0; k < n; ++k) {
            Partition hook = add_part(Partition::repeated(1, k), n - k);
            CHECK(dimension(hook) == binomial(n - 1, k));
        }
        Integer squares = 0;
        for (const auto& p : enumerate_partitions(n)) {
            squares += dimension(p) * dimension(p);
            CHECK(dimension(p) == static_cast<long>(enumerate_syt(p).size()));
        }
        CHECK(squares == factorial(n));
    }
}

TEST_CASE("enumerate_syt_marked") {
    CHECK(enumerate_syt_marked({2, 1}, 2).size() == 1);
    CHECK(enumerate_syt_marked({2, 1}, 1).size() == 1);
    CHECK(enumerate_syt_marked({5}, 5).size() == 1);
    for (int n = 2; n <= 8; ++n) {
        for (const auto& m : enumerate_marked_partitions(n)) {
            auto marked = enumerate_syt_marked(m.shape, m.mark);
            CHECK(marked.size() == dimension(decrement_part(m)));
            for (const auto& t : marked) CHECK(t.content_of(n) == marked_content(m));
        }
    }
}

TEST_CASE("content vectors") {
    CHECK(content_vector(StandardTableau({{1, 2, 3}})) == std::vector<int>{0, 1, 2});
    CHECK(content_vector(StandardTableau({{1}, {2}, {3}})) == std::vector<int>{0, -1, -2});
    CHECK(content_vector(StandardTableau({{1, 2}, {3}})) == std::vector<int>{0, 1, -1});
    CHECK_THROWS_AS(StandardTableau({{2, 1}}), DomainError);
    CHECK_THROWS_AS(StandardTableau({{1, 3}, {4, 5}, {2, 6}}), DomainError);
}

TEST_CASE("marked content") {
    for (int n = 1; n <= 7; ++n) CHECK(marked_content({n}, n) == n - 1);
    CHECK(marked_content({2, 1}, 1) == -1);
    CHECK(marked_content({2, 2, 1}, 2) == 0);
    CHECK(marked_content({2, 1}, 2) == 1);
}

TEST_CASE("content polynomial") {
    auto ints = [](std::initializer_list<long> xs) {
        std::vector<Integer> v;
        for (long x : xs) v.emplace_back(x);
        return v;
    };
    CHECK(content_polynomial({2, 1}) == ints({0, -1, 0, 1}));
    CHECK(content_polynomial({3}) == ints({0, 2, 3, 1}));
    CHECK(content_polynomial({2, 2}) == ints({0, 0, -1, 0, 1}));
}

TEST_CASE("content sums") {
    CHECK(content_sums({2, 1}) == ContentSums{0, 2});
    CHECK(content_sums({1, 1}) == ContentSums{-1, 1});
    CHECK(content_sums({3, 2}) == ContentSums{2, 6});
    auto c = contents({3, 2});
    std::sort(c.begin(), c.end());
    CHECK(c == std::vector<int>{-1, 0, 0, 1, 2});
}
