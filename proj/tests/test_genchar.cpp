#include <doctest.h>

#include "helpers.hpp"
#include "nearcentral/characters.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/oracle.hpp"
#include "nearcentral/tableaux.hpp"

using namespace nearcentral;
using test_helpers::mp;
using test_helpers::q;

TEST_CASE("pinned values at n = 3") {
    CHECK(genchar_strahov(mp({2, 1}, 2), mp({2, 1}, 2)) == q(1, 2));
    // Index order: upper is the idempotent label, lower the class.
    CHECK(genchar_strahov(mp({3}, 3), mp({2, 1}, 2)) == 1);
    CHECK(genchar_strahov(mp({2, 1}, 2), mp({3}, 3)) == q(-1, 2));
    CHECK(genchar_closed_form(mp({3}, 3), mp({2, 1}, 2)) == 1);
    CHECK(genchar_closed_form(mp({2, 1}, 2), mp({3}, 3)) == q(-1, 2));
    CHECK(genchar_closed_form(mp({2, 1}, 1), mp({2, 1}, 1)) == 1);
    CHECK(genchar(mp({2, 1}, 1), mp({2, 1}, 2)) == q(-1, 2));
    CHECK(genchar(mp({1, 1, 1}, 1), mp({2, 1}, 2)) == -1);
    CHECK(genchar(mp({2, 1}, 2), mp({2, 1}, 1)) == -1);
}

TEST_CASE("hook row pinned values") {
    for (int n = 3; n <= 8; ++n) {
        CHECK(genchar_hook_row(mp({n}, n)) == 1);
        CHECK(genchar_hook_row(MarkedPartition(Partition::repeated(1, n), 1)) == sign_power(n));
    }
    CHECK(genchar_hook_row(mp({2, 1}, 2)) == q(1, 2));
    // The (n-k-1,2,1^{k-1}) shapes with a mark other than 2 are nonzero.
    CHECK(genchar_hook_row(mp({3, 2}, 3)) == q(-1, 2));
    CHECK(genchar_hook_row(mp({3, 2}, 3)) == genchar_strahov(mp({3, 2}, 3), mp({4, 1}, 4)));
}

TEST_CASE("identity class gives the lower dimension") {
    for (int n = 1; n <= 7; ++n) {
        const MarkedPartition id(Partition::repeated(1, n), 1);
        for (const auto& mu : enumerate_marked_partitions(n)) {
            CHECK(genchar(mu, id) == Rational(dimension(decrement_part(mu))));
            if (n <= 6) CHECK(genchar_strahov(mu, id) == Rational(dimension(decrement_part(mu))));
        }
    }
}

TEST_CASE("closed forms, hook row and convolution agree with the oracle") {
    for (int n = 3; n <= 6; ++n) {
        const auto marked = enumerate_marked_partitions(n);
        for (ClosedFormRow row : kClosedFormRows) {
            if (n < closed_form_min_n(row)) continue;
            const auto lower = closed_form_shape(row, n);
            for (const auto& upper : marked) {
                CAPTURE(upper.to_string());
                CAPTURE(lower.to_string());
                Rational oracle = genchar_oracle(upper, lower);
                CHECK(closed_form_row_value(row, upper) == oracle);
                CHECK(genchar_strahov(upper, lower) == oracle);
            }
        }
        const MarkedPartition hook_class({n - 1, 1}, n - 1);
        for (const auto& upper : marked) {
            CAPTURE(upper.to_string());
            CHECK(genchar_hook_row(upper) == genchar_oracle(upper, hook_class));
        }
    }
}

TEST_CASE("closed-form dispatcher rejects unmatched classes") {
    CHECK_FALSE(try_genchar_closed_form(mp({3, 2}, 3), mp({3, 2}, 2)).has_value());
    CHECK_THROWS_AS(genchar_closed_form(mp({3, 2}, 3), mp({3, 2}, 2)), UnsupportedPattern);
    CHECK_THROWS_AS(genchar(mp({3, 2}, 3), mp({3, 2}, 2), GenCharMethod::table), UnsupportedPattern);
    CHECK(genchar(mp({3, 2}, 3), mp({3, 2}, 2)) == genchar_strahov(mp({3, 2}, 3), mp({3, 2}, 2)));
}

TEST_CASE("representative independence") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& lower : enumerate_marked_partitions(n)) {
            auto reps = class_sum(lower).terms();
            for (const auto& upper : enumerate_marked_partitions(n)) {
                const Rational expected = genchar_strahov(upper, lower);
                for (const auto& [p, c] : reps) CHECK(genchar_strahov(upper, p) == expected);
            }
        }
    }
}

TEST_CASE("guard") {
    CHECK_THROWS_AS(genchar_strahov(mp({5}, 5), mp({4, 1}, 1), 4), GuardExceeded);
    CHECK_THROWS_AS(genchar(mp({2, 1}, 2), mp({2, 2}, 2)), DomainError);
}

TEST_CASE("sum lemmas") {
    CHECK(superscript_sum({2, 1}, mp({2, 1}, 2)) == 0);
    CHECK(superscript_sum({1, 1, 1}, mp({2, 1}, 2)) == -1);
    CHECK(subscript_sum_chi(mp({2, 1}, 2), {2, 1}) == 0);
    CHECK(subscript_sum_chi(mp({2, 1}, 2), {3}) == -1);
    CHECK(weighted_sum(mp({2, 1}, 2), 3) == 1);
    CHECK(weighted_sum(mp({2, 1}, 2), 2) == 0);
    CHECK(weighted_sum(mp({2, 1}, 2), 1) == -1);
    for (int n = 2; n <= 6; ++n) {
        for (const auto& lower : enumerate_marked_partitions(n)) {
            CHECK(superscript_sum({n}, lower) == 1);
            for (const auto& mu : enumerate_partitions(n)) {
                CHECK(superscript_sum(mu, lower) == Rational(chi(mu, lower.shape)));
            }
        }
        for (const auto& upper : enumerate_marked_partitions(n)) {
            const auto poly = content_polynomial(upper.shape);
            for (const auto& lambda : enumerate_partitions(n)) {
                CHECK(subscript_sum_chi(upper, lambda) == Rational(chi(upper.shape, lambda)));
            }
            for (int m = 1; m <= n; ++m) CHECK(weighted_sum(upper, m) == Rational(poly[static_cast<std::size_t>(m)]));
        }
    }
}

TEST_CASE("connection coefficients") {
    const auto t = mp({2, 1}, 2);
    CHECK(connection_coefficient(t, t, mp({1, 1, 1}, 1)) == 2);
    CHECK(connection_coefficient(t, t, mp({3}, 3)) == 1);
    CHECK(connection_coefficient(t, t, mp({2, 1}, 1)) == 0);
    for (int n = 3; n <= 5; ++n) {
        const auto marked = enumerate_marked_partitions(n);
        for (const auto& a : marked) {
            for (const auto& b : marked) {
                for (const auto& c : marked) {
                    Rational v = connection_coefficient(a, b, c);
                    CHECK(v == connection_coefficient(b, a, c));
                    CHECK(v >= 0);
                    CHECK(v.get_den() == 1);
                }
            }
        }
    }
}

TEST_CASE("multi-product coefficients") {
    const auto t = mp({2, 1}, 2);
    std::vector<MarkedPartition> one{t};
    CHECK(multi_product_coefficient(one, t) == 1);
    std::vector<MarkedPartition> three{t, t, t};
    CHECK(multi_product_coefficient(three, t) == 3);
    const auto marked = enumerate_marked_partitions(4);
    for (const auto& a : marked) {
        for (const auto& b : marked) {
            std::vector<MarkedPartition> pair{a, b};
            for (const auto& c : marked) CHECK(multi_product_coefficient(pair, c) == connection_coefficient(a, b, c));
        }
    }
}

TEST_CASE("orthogonality") {
    CHECK(orthogonality_check(mp({2, 1}, 2), mp({2, 1}, 2)) == q(1, 2));
    CHECK(orthogonality_check(mp({2, 1}, 2), mp({3}, 3)) == 0);
    for (int n = 2; n <= 6; ++n) {
        CHECK(orthogonality_check(mp({n}, n), mp({n}, n)) == 1);
        const auto marked = enumerate_marked_partitions(n);
        for (const auto& a : marked) {
            for (const auto& b : marked) {
                Rational expected = 0;
                if (a == b) expected = Rational(dimension(decrement_part(a)), dimension(a.shape));
                expected.canonicalize();
                CHECK(orthogonality_check(a, b) == expected);
            }
        }
    }
}
