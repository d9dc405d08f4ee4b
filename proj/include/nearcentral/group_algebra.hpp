#pragma once

#include <map>

#include "nearcentral/permutation.hpp"

namespace nearcentral {

/// Element of ℚ[S_n]: a finitely supported map from permutations to rationals.
/// Zero coefficients are never stored.
class GroupAlgebraElement {
public:
    using Terms = std::map<Permutation, Rational>;

    explicit GroupAlgebraElement(int n = 0) : n_(n) {}
    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement basis(const Permutation& p, const Rational& coefficient = 1);

    int degree() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t support_size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Permutation& p) const;
    void add_term(const Permutation& p, const Rational& c);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs);
    GroupAlgebraElement& operator*=(const Rational& scalar);

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) { return a *= s; }
    friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) { return a *= s; }
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

    /// Reinterprets an S_m element inside S_n (m <= n) with the extra symbols fixed.
    GroupAlgebraElement embed(int n) const;

private:
    void check_same_degree(const GroupAlgebraElement& rhs) const;

    int n_;
    Terms terms_;
};

/// Convolution product; bilinear, associative. Throws DomainError on mixed degree.
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return ga_multiply(a, b);
}

/// a^e by repeated squaring; a^0 is the identity.
GroupAlgebraElement ga_power(const GroupAlgebraElement& a, unsigned e);

}  // namespace nearcentral
