#pragma once

#include <utility>
#include <vector>

#include "nearcentral/partitions.hpp"

namespace nearcentral {

/// Standard Young tableau in English convention; rows()[r][c] holds a symbol in 1..n.
class StandardTableau {
public:
    /// Validates shape, row/column increase, and that 1..n each appear once.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.size(); }

    /// (row, column) of `symbol`, zero-based.
    std::pair<int, int> cell_of(int symbol) const;
    /// c_T(symbol) = column - row.
    int content_of(int symbol) const { auto [r, c] = cell_of(symbol); return c - r; }

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// All SYT of shape λ. Built by placing n, n-1, ... at removable corners,
/// topmost corner first.
std::vector<StandardTableau> enumerate_syt(const Partition& lambda);

/// SYT_{λ,i}: tableaux whose cell holding n ends a row of length i.
std::vector<StandardTableau> enumerate_syt_marked(const Partition& lambda, int part);

/// d_λ via the hook-length formula; dimension(()) == 1.
Integer dimension(const Partition& lambda);

/// (c_T(1), ..., c_T(n))
std::vector<int> content_vector(const StandardTableau& t);

/// Multiset of cell contents of λ, row by row.
std::vector<int> contents(const Partition& lambda);

/// c_{λ,i} = i - Σ_{k≥i} m_k(λ)
int marked_content(const Partition& lambda, int part);
inline int marked_content(const MarkedPartition& m) { return marked_content(m.shape, m.mark); }

/// Coefficients of ∏_cells (t + content), index = power of t.
std::vector<Integer> content_polynomial(const Partition& lambda);

struct ContentSums {
    long sum = 0;          // σ(λ)
    long sum_squares = 0;  // σ⁽²⁾(λ)
    friend bool operator==(const ContentSums&, const ContentSums&) = default;
};
ContentSums content_sums(const Partition& lambda);

}  // namespace nearcentral
