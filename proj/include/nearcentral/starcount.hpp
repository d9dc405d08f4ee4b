#pragma once

#include <string_view>

#include "nearcentral/partitions.hpp"
#include "nearcentral/series.hpp"

namespace nearcentral {

/// Number of factorizations of any π ∈ C_{λ,i} into r star transpositions,
/// [K_{λ,i}]J_n^r = Σ_{μ,j} (d_μ/n!) γ^{μ,j}_{λ,i} c_{μ,j}^r.
Integer star_count(const MarkedPartition& lambda, int r);

/// Marked classes with a hyperbolic-series closed form.
enum class ClosedCase {
    full_cycle,        // (n),n
    fix_point_mark1,   // (n-1,1),1
    transposed_mark,   // (n-1,1),n-1
};

ClosedCase parse_closed_case(std::string_view name);
std::string_view closed_case_name(ClosedCase c);
MarkedPartition closed_case_shape(ClosedCase c, int n);

/// sinh((n-1)x/2) sinh(x/2)^{n-1} modulo x^{order+1}.
TruncatedSeries transitive_series(int n, int order);

/// Closed series form for the three cases; n >= 3, r >= 1. `extra_order`
/// pads the truncation beyond what extraction needs (results do not depend on it).
Integer star_count_closed(ClosedCase c, int n, int r, int extra_order = 2);

/// Star factorizations whose product lies anywhere in C_λ, via ordinary characters:
/// (|C_λ|/n!) Σ_μ (Σ_{j∈μ} d_{j₋(μ)} c_{μ,j}^r) χ^μ_λ.
Integer star_count_class(const Partition& lambda, int r);

/// Star factorizations whose product has exactly k cycles, via content polynomials.
Integer star_count_by_cycle_count(int n, int k, int r);

}  // namespace nearcentral
