#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nearcentral/partitions.hpp"

namespace nearcentral {

/// Bijection of {1..n} in one-line form, n <= kMaxDegree.
///
/// Products follow the right-to-left convention: (a * b)(x) = a(b(x)).
class Permutation {
public:
    static constexpr int kMaxDegree = 16;

    /// Identity of S_n.
    explicit Permutation(int n = 0);

    /// images[k-1] = π(k), symbols 1-based; throws DomainError unless a bijection.
    static Permutation from_one_line(std::span<const int> images);
    /// Product of disjoint cycles, symbols 1-based.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    static Permutation transposition(int n, int a, int b);
    /// "2,3,1" (one-line) or "(1 2)(3 4)" / "(1,2)(3,4)" (cycles; needs n).
    static Permutation parse(std::string_view text, int n);

    int degree() const noexcept { return n_; }
    /// π(x) for 1-based x.
    int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)] + 1; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    /// Same permutation acting on {1..n}, extra symbols fixed.
    Permutation embed(int n) const;

    Partition cycle_type() const;
    int cycle_length_containing(int x) const;
    /// (κ(π), length of the cycle containing n)
    MarkedPartition marked_type() const;
    int sign() const;

    std::vector<int> one_line() const;
    std::string to_cycle_string() const;

    /// Lexicographic rank of the one-line form, in [0, n!).
    std::uint64_t rank() const;
    static Permutation unrank(int n, std::uint64_t rank);

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.n_ == b.n_ && a.img_ == b.img_; }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.img_ <=> b.img_;
    }
    std::size_t hash() const noexcept;

private:
    std::array<std::uint8_t, kMaxDegree> img_{};  // zero-based images, unused slots fixed
    std::uint8_t n_ = 0;
};

/// All n! permutations in lexicographic order of one-line form.
std::vector<Permutation> all_permutations(int n);

}  // namespace nearcentral

template <>
struct std::hash<nearcentral::Permutation> {
    std::size_t operator()(const nearcentral::Permutation& p) const noexcept { return p.hash(); }
};
