#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nearcentral/numeric.hpp"

namespace nearcentral {

/// Integer partition stored as a weakly decreasing list of positive parts.
///
/// Ordering is lexicographic on the part list, so sorting descending gives
/// the reverse-lexicographic order used for every enumeration and output.
class Partition {
public:
    Partition() = default;
    /// Sorts `parts` descending; throws DomainError on a non-positive part.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (k^count) convenience, e.g. Partition::repeated(1, n) for the identity class.
    static Partition repeated(int part, int count);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t k) const { return parts_[k]; }

    int multiplicity(int part) const;
    bool contains(int part) const { return multiplicity(part) > 0; }
    /// Distinct part values, largest first.
    std::vector<int> distinct_parts() const;

    /// (n-k, 1^k) shapes, including (n) and (1^n).
    bool is_hook() const;

    std::string to_string() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// A partition with a distinguished part value; indexes K_{λ,i} and Γ^{λ,i}.
struct MarkedPartition {
    Partition shape;
    int mark = 0;

    MarkedPartition() = default;
    /// Throws DomainError when `mark` is not a part of `shape`.
    MarkedPartition(Partition shape, int mark);

    int size() const noexcept { return shape.size(); }
    std::string to_string() const;
    /// "3,1,1@1"
    static MarkedPartition parse(std::string_view text);

    friend bool operator==(const MarkedPartition&, const MarkedPartition&) = default;
    friend auto operator<=>(const MarkedPartition& a, const MarkedPartition& b) {
        if (auto c = a.shape <=> b.shape; c != 0) return c;
        return a.mark <=> b.mark;
    }
};

/// All partitions of n, reverse-lexicographic (largest first).
std::vector<Partition> enumerate_partitions(int n);

/// Every (λ ⊢ n, distinct part i): partitions in reverse-lex order, marks descending.
std::vector<MarkedPartition> enumerate_marked_partitions(int n);

Partition remove_part(const Partition& lambda, int part);
Partition add_part(const Partition& lambda, int part);
/// i₋(λ): one copy of `part` replaced by part-1; part 1 is deleted.
Partition decrement_part(const Partition& lambda, int part);
inline Partition decrement_part(const MarkedPartition& m) { return decrement_part(m.shape, m.mark); }

/// |C_λ| = n! / ∏ i^{m_i} m_i!
Integer class_size(const Partition& lambda);
/// |C_{λ,i}| = (n-1)! i m_i / ∏ i^{m_i} m_i!
Integer marked_class_size(const Partition& lambda, int part);
inline Integer marked_class_size(const MarkedPartition& m) { return marked_class_size(m.shape, m.mark); }

}  // namespace nearcentral

template <>
struct std::hash<nearcentral::Partition> {
    std::size_t operator()(const nearcentral::Partition& p) const noexcept {
        std::size_t h = 0;
        for (int x : p.parts()) h = h * 131 + static_cast<std::size_t>(x);
        return h;
    }
};
