#include <doctest.h>

#include "helpers.hpp"
#include "nearcentral/asf.hpp"
#include "nearcentral/oracle.hpp"
#include "nearcentral/tableaux.hpp"

using namespace nearcentral;
using test_helpers::mp;
using test_helpers::q;

namespace {

GroupAlgebraElement delta(int n, std::vector<std::vector<int>> cycles) {
    return GroupAlgebraElement::basis(Permutation::from_cycles(n, cycles));
}

}  // namespace

TEST_CASE("class sums") {
    CHECK(class_sum(mp({1, 1, 1}, 1)) == GroupAlgebraElement::identity(3));
    CHECK(class_sum(mp({2, 1}, 2)) == delta(3, {{2, 3}}) + delta(3, {{1, 3}}));
    CHECK(class_sum(mp({3}, 3)) == delta(3, {{1, 2, 3}}) + delta(3, {{1, 3, 2}}));
    CHECK(conjugacy_class_sum({2, 1}) == delta(3, {{1, 2}}) + delta(3, {{2, 3}}) + delta(3, {{1, 3}}));
    CHECK_THROWS_AS(class_sum(mp({10}, 10), 9), GuardExceeded);
}

TEST_CASE("Jucys-Murphy elements") {
    CHECK(jm_element(2, 2) == delta(2, {{1, 2}}));
    CHECK(jm_element(3, 3) == delta(3, {{1, 3}}) + delta(3, {{2, 3}}));
    for (int n = 2; n <= 7; ++n) CHECK(jm_element(n, n) == class_sum(MarkedPartition(add_part(Partition::repeated(1, n - 2), 2), 2)));
    CHECK_THROWS_AS(jm_element(1, 3), DomainError);
}

TEST_CASE("central idempotents") {
    auto all = all_permutations(4);
    auto triv = central_idempotent({4});
    auto sign = central_idempotent({1, 1, 1, 1});
    for (const auto& p : all) {
        CHECK(triv.coefficient(p) == q(1, 24));
        CHECK(sign.coefficient(p) == q(p.sign(), 24));
    }
    auto x = central_idempotent({2, 1});
    CHECK(x * x == x);
}

TEST_CASE("near-central idempotents") {
    auto a = z1_idempotent(mp({2, 1}, 2));
    auto b = z1_idempotent(mp({2, 1}, 1));
    CHECK(a + b == central_idempotent({2, 1}));
    CHECK((a * b).is_zero());
    CHECK(jm_element(3, 3) * a == a);
    CHECK(jm_element(3, 3) * b == b * q(-1));
    CHECK(is_near_central(a));
}

TEST_CASE("coefficient extraction") {
    CHECK(extract_marked_coefficient(class_sum(mp({3, 1}, 1)), mp({3, 1}, 1)) == 1);
    auto j2 = jm_element(3, 3) * jm_element(3, 3);
    CHECK(extract_marked_coefficient(j2, mp({1, 1, 1}, 1)) == 2);
    CHECK(extract_marked_coefficient(j2, mp({2, 1}, 2)) == 0);
    CHECK_THROWS_AS(extract_marked_coefficient(delta(4, {{1, 2}}), mp({2, 1, 1}, 1)), NotNearCentral);
    CHECK_THROWS_AS(extract_marked_coefficient(j2, mp({2, 2}, 2)), DomainError);
}

TEST_CASE("near-centrality") {
    CHECK(is_near_central(class_sum(mp({2, 2, 1}, 2))));
    // Only S_{n-1} acts, so a transposition fixing n is near-central in S_3 but not in S_4.
    CHECK(is_near_central(delta(3, {{1, 2}})));
    CHECK_FALSE(is_near_central(delta(4, {{1, 2}})));
    CHECK(is_near_central(class_sum(mp({3, 1}, 3)) * class_sum(mp({2, 1, 1}, 1))));
    // A single star transposition is moved by conjugation with (1 2).
    CHECK_FALSE(is_near_central(delta(4, {{1, 4}})));
}

TEST_CASE("powers of J_n") {
    auto r2 = jm_power_coefficients(3, 2);
    CHECK(r2.at(mp({1, 1, 1}, 1)) == 2);
    CHECK(r2.at(mp({3}, 3)) == 1);
    CHECK(r2.at(mp({2, 1}, 2)) == 0);
    CHECK(r2.at(mp({2, 1}, 1)) == 0);
    auto r3 = jm_power_coefficients(3, 3);
    CHECK(r3.at(mp({2, 1}, 2)) == 3);
    CHECK(r3.at(mp({2, 1}, 1)) == 2);
    CHECK(r3.at(mp({3}, 3)) == 0);
    for (int n = 2; n <= 6; ++n) {
        for (const auto& [m, c] : jm_power_coefficients(n, 0)) {
            CHECK(c == (m == MarkedPartition(Partition::repeated(1, n), 1) ? 1 : 0));
        }
    }
}

TEST_CASE("star factorization enumeration") {
    CHECK(enumerate_star_factorizations(Permutation::transposition(3, 2, 3), 3) == 3);
    CHECK(enumerate_star_factorizations(Permutation::transposition(3, 1, 2), 3) == 2);
    for (int r = 1; r <= 7; r += 2) CHECK(enumerate_star_factorizations(Permutation(4), r) == 0);
    CHECK_THROWS_AS(enumerate_star_factorizations(Permutation(5), 20, 1000), GuardExceeded);
    for (int n = 2; n <= 5; ++n) {
        for (int r = 0; r <= 6; ++r) {
            auto coeffs = jm_power_coefficients(n, r);
            for (const auto& [m, c] : coeffs) {
                auto rep = class_sum(m).terms().begin()->first;
                CHECK(enumerate_star_factorizations(rep, r) == require_integer(c, "test"));
            }
        }
    }
}

TEST_CASE("almost symmetric polynomials at Jucys-Murphy elements") {
    using P = AlmostSymmetricPoly;
    CHECK(evaluate_asf_at_jm(P::xn(), 4) == class_sum(mp({2, 1, 1}, 2)));
    CHECK(evaluate_asf_at_jm(P::elementary(3, VariableRange::full), 4) == class_sum(mp({4}, 4)));
    CHECK(evaluate_asf_at_jm(P::xn().pow(2) - P::constant(3), 4) == class_sum(mp({3, 1}, 3)));
    for (int n = 2; n <= 6; ++n) {
        for (JmBasisRow row : kJmBasisRows) {
            if (n < jm_basis_min_n(row)) continue;
            CHECK(evaluate_asf_at_jm(jm_basis_row_poly(row, n), n) == class_sum(jm_basis_shape(row, n)));
        }
    }
}

TEST_CASE("numeric evaluation at contents") {
    using P = AlmostSymmetricPoly;
    CHECK(evaluate_asf(P::xn(), mp({2, 1}, 2)) == 1);
    CHECK(evaluate_asf(P::power_sum(1, VariableRange::inner), mp({2, 1}, 1)) == 1);
    CHECK(evaluate_asf(P::elementary(2, VariableRange::full), mp({2, 1}, 2)) == -1);
    // f(J) Gamma = f(contents) Gamma for every idempotent.
    for (int n = 3; n <= 5; ++n) {
        P f = P::xn().pow(2) * P::power_sum(2, VariableRange::inner) + q(1, 2) * P::elementary(2, VariableRange::full);
        auto fj = evaluate_asf_at_jm(f, n);
        for (const auto& m : enumerate_marked_partitions(n)) {
            auto g = z1_idempotent(m);
            CHECK(fj * g == g * evaluate_asf(f, m));
        }
    }
}

TEST_CASE("reconstruction from idempotents") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& m : enumerate_marked_partitions(n)) CHECK(reconstruct_from_idempotents(m) == class_sum(m));
    }
}

TEST_CASE("verify") {
    auto report = verify(4);
    CHECK(report.ok);
    CHECK(report.first_failure.empty());
    CHECK(report.checks > 300);
}
