#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "nearcentral/asf.hpp"
#include "nearcentral/group_algebra.hpp"

namespace nearcentral {

/// Thrown by extract_marked_coefficient when coefficients differ across a marked class.
class NotNearCentral : public DomainError {
public:
    using DomainError::DomainError;
};

/// K_{λ,i}: unit sum over permutations of type λ with n on an i-cycle.
GroupAlgebraElement class_sum(const MarkedPartition& lambda, int max_n = default_max_n());
/// K_λ: unit sum over the whole conjugacy class.
GroupAlgebraElement conjugacy_class_sum(const Partition& lambda, int max_n = default_max_n());

/// J_k = Σ_{i<k} (i,k) inside S_n, 2 <= k <= n.
GroupAlgebraElement jm_element(int k, int n);

/// X^λ = (d_λ/n!) Σ_μ χ^λ_μ K_μ
GroupAlgebraElement central_idempotent(const Partition& lambda, int max_n = default_max_n());

/// Γ^{λ,i} = X^λ X^{i₋(λ)}, the second factor embedded with n fixed.
GroupAlgebraElement z1_idempotent(const MarkedPartition& lambda, int max_n = default_max_n());

/// True iff g commutes with every adjacent transposition (k,k+1), k <= n-2.
bool is_near_central(const GroupAlgebraElement& g);

/// Common coefficient of g on C_{μ,j}; throws NotNearCentral if not constant.
Rational extract_marked_coefficient(const GroupAlgebraElement& g, const MarkedPartition& mu);

/// Coefficients of g in the standard basis K_{λ,i} (zero entries included).
std::map<MarkedPartition, Rational> standard_basis_expansion(const GroupAlgebraElement& g);

/// γ^{upper}_{lower} read off Γ^{upper} literally: (n!/d_μ)[K_lower]Γ^{upper}.
Rational genchar_oracle(const MarkedPartition& upper, const MarkedPartition& lower, int max_n = default_max_n());

/// J_n^r expanded by repeated multiplication, then read in the standard basis.
std::map<MarkedPartition, Rational> jm_power_coefficients(int n, int r, int max_n = default_max_n());

/// Number of star-transposition sequences (τ_1..τ_r) with τ_1⋯τ_r = π, by
/// enumeration. Throws GuardExceeded when (n-1)^r exceeds `limit`.
Integer enumerate_star_factorizations(const Permutation& pi, int r, std::uint64_t limit = 10'000'000);

/// f(J_2, ..., J_n): x_n ↦ J_n, inner ↦ J_2..J_{n-1}, full ↦ J_2..J_n.
GroupAlgebraElement evaluate_asf_at_jm(const AlmostSymmetricPoly& f, int n, int max_n = default_max_n());

/// Σ_{μ,j} (|C_{λ,i}|/d_{j₋(μ)}) γ^{μ,j}_{λ,i} Γ^{μ,j}, for comparison with K_{λ,i}.
GroupAlgebraElement reconstruct_from_idempotents(const MarkedPartition& lambda, int max_n = default_max_n());

struct VerifyReport {
    bool ok = true;
    std::size_t checks = 0;
    std::string first_failure;  // identity with both sides, empty when ok
};

/// Runs the oracle invariant suite for 2 <= n <= max_n; stops at the first failure.
VerifyReport verify(int max_n, std::ostream* progress = nullptr);

}  // namespace nearcentral
