#pragma once

#include <optional>
#include <span>
#include <string>

#include "nearcentral/partitions.hpp"
#include "nearcentral/permutation.hpp"

namespace nearcentral {

// Throughout, genchar(upper, lower) is γ^{upper}_{lower} = (n!/d_μ)[K_lower]Γ^{upper}
// with upper = (μ,j) indexing the idempotent and lower = (λ,i) the class.

/// A permutation of marked type (λ,i): the i-cycle holding n comes first and
/// takes symbols 1..i-1, then cycles by decreasing length take the next symbols.
Permutation canonical_representative(const MarkedPartition& lower);

/// Character-convolution evaluation over S_{n-1}; exact. Guarded by max_n (n <= 9 default).
Rational genchar_strahov(const MarkedPartition& upper, const MarkedPartition& lower, int max_n = default_max_n());
/// Same, at an explicit representative π of the lower class (not memoized).
Rational genchar_strahov(const MarkedPartition& upper, const Permutation& representative, int max_n = default_max_n());

/// Closed-form rows for eight lower classes.
enum class ClosedFormRow {
    transposition_at_n,          // (2,1^{n-2}),2
    transposition_fixed,         // (2,1^{n-2}),1
    three_cycle_at_n,            // (3,1^{n-3}),3
    double_transposition_at_n,   // (2,2,1^{n-4}),2
    three_cycle_fixed,           // (3,1^{n-3}),1
    double_transposition_fixed,  // (2,2,1^{n-4}),1
    full_cycle,                  // (n),n
    long_cycle_fixed,            // (n-1,1),1
};

inline constexpr ClosedFormRow kClosedFormRows[] = {
    ClosedFormRow::transposition_at_n, ClosedFormRow::transposition_fixed, ClosedFormRow::three_cycle_at_n,
    ClosedFormRow::double_transposition_at_n, ClosedFormRow::three_cycle_fixed,
    ClosedFormRow::double_transposition_fixed, ClosedFormRow::full_cycle, ClosedFormRow::long_cycle_fixed,
};

int closed_form_min_n(ClosedFormRow row);
MarkedPartition closed_form_shape(ClosedFormRow row, int n);
/// Row formula at γ^{upper}_{row shape}.
Rational closed_form_row_value(ClosedFormRow row, const MarkedPartition& upper);

/// Value from the first closed-form row whose shape is `lower`, if any.
std::optional<Rational> try_genchar_closed_form(const MarkedPartition& upper, const MarkedPartition& lower);
/// Throws UnsupportedPattern when no row matches.
Rational genchar_closed_form(const MarkedPartition& upper, const MarkedPartition& lower);

/// γ^{μ,j}_{(n-1,1),n-1} by case analysis; n >= 3.
Rational genchar_hook_row(const MarkedPartition& upper);

enum class GenCharMethod { automatic, table, strahov };

/// Dispatcher: closed forms or the hook row when they apply, Strahov otherwise.
/// `table` insists on a closed form; `strahov` always convolves. Memoized.
Rational genchar(const MarkedPartition& upper, const MarkedPartition& lower, GenCharMethod method = GenCharMethod::automatic);

/// Σ_{j∈μ} γ^{μ,j}_{λ,i}; equals χ^μ_λ for every i.
Rational superscript_sum(const Partition& mu, const MarkedPartition& lower);

/// d_μ/(|C_λ| d_{j₋(μ)}) Σ_{i∈λ} |C_{λ,i}| γ^{μ,j}_{λ,i}; equals χ^μ_λ for every j.
Rational subscript_sum_chi(const MarkedPartition& upper, const Partition& lambda);

/// Σ_{m(λ)=m, i∈λ} |C_{λ,i}|/d_{ℓ₋(ρ)} γ^{ρ,ℓ}_{λ,i}; equals [t^m] c_ρ(t).
Rational weighted_sum(const MarkedPartition& upper, int parts);

/// [K_c] K_a K_b. Asserts the result is a nonnegative integer.
Rational connection_coefficient(const MarkedPartition& a, const MarkedPartition& b, const MarkedPartition& c);

/// [K_target] ∏ K_factors, r = factors.size() >= 1.
Rational multi_product_coefficient(std::span<const MarkedPartition> factors, const MarkedPartition& target);

/// (1/n!) Σ_{ρ,k} |C_{ρ,k}| γ^a_{ρ,k} γ^b_{ρ,k}
Rational orthogonality_check(const MarkedPartition& a, const MarkedPartition& b);

}  // namespace nearcentral
