#include "nearcentral/group_algebra.hpp"

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

namespace nearcentral {

GroupAlgebraElement GroupAlgebraElement::identity(int n) { return basis(Permutation(n)); }

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p, const Rational& coefficient) {
    GroupAlgebraElement g(p.degree());
    g.add_term(p, coefficient);
    return g;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
    if (p.degree() != n_) throw DomainError("permutation degree does not match group algebra");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GroupAlgebraElement::check_same_degree(const GroupAlgebraElement& rhs) const {
    if (n_ != rhs.n_) {
        throw DomainError("group algebra size mismatch: S_" + std::to_string(n_) + " vs S_" + std::to_string(rhs.n_));
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
    check_same_degree(rhs);
    if (&rhs == this) return *this *= 2;
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& rhs) {
    check_same_degree(rhs);
    if (&rhs == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= scalar;
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::embed(int n) const {
    GroupAlgebraElement out(n);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p.embed(n), c);
    return out;
}

namespace {

// Coefficients rescaled to integers over one common denominator.
struct ScaledTerms {
    std::vector<Permutation> perms;
    std::vector<Integer> numerators;
    Integer denominator = 1;
    bool fits_int64 = true;
    Integer max_abs = 0;
};

ScaledTerms scale(const GroupAlgebraElement& g) {
    ScaledTerms s;
    for (const auto& [p, c] : g.terms()) {
        mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(), c.get_den_mpz_t());
    }
    for (const auto& [p, c] : g.terms()) {
        Integer num = c.get_num() * (s.denominator / c.get_den());
        if (!num.fits_slong_p()) s.fits_int64 = false;
        if (abs(num) > s.max_abs) s.max_abs = abs(num);
        s.perms.push_back(p);
        s.numerators.push_back(std::move(num));
    }
    return s;
}

constexpr std::uint64_t kDenseLimit = 362880;  // 9!

template <typename Acc, typename Num>
GroupAlgebraElement convolve(int n, const ScaledTerms& a, const ScaledTerms& b, const std::vector<Num>& an,
                             const std::vector<Num>& bn, const Integer& denominator) {
    GroupAlgebraElement out(n);
    auto emit = [&](const Permutation& p, const Acc& value) {
        if (value == 0) return;
        Rational q;
        if constexpr (std::is_same_v<Acc, Integer>) {
            q = Rational(value, denominator);
        } else {
            // __int128 has no direct mpz conversion; split into two 64-bit halves.
            bool negative = value < 0;
            unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-value) : static_cast<unsigned __int128>(value);
            Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
            Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
            Integer z = (hi << 64) + lo;
            q = Rational(negative ? Integer(-z) : z, denominator);
        }
        q.canonicalize();
        out.add_term(p, q);
    };

    const std::uint64_t group_order = factorial(n).fits_ulong_p() ? factorial(n).get_ui() : std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t pairs = static_cast<std::uint64_t>(a.perms.size()) * b.perms.size();
    if (group_order <= kDenseLimit && pairs >= group_order / 4) {
        std::vector<Acc> dense(group_order, Acc(0));
        for (std::size_t x = 0; x < a.perms.size(); ++x) {
            for (std::size_t y = 0; y < b.perms.size(); ++y) {
                dense[(a.perms[x] * b.perms[y]).rank()] += an[x] * bn[y];
            }
        }
        for (std::uint64_t r = 0; r < group_order; ++r) {
            if (dense[r] != 0) emit(Permutation::unrank(n, r), dense[r]);
        }
    } else {
        std::unordered_map<Permutation, Acc> sparse;
        for (std::size_t x = 0; x < a.perms.size(); ++x) {
            for (std::size_t y = 0; y < b.perms.size(); ++y) {
                sparse[a.perms[x] * b.perms[y]] += an[x] * bn[y];
            }
        }
        for (const auto& [p, v] : sparse) emit(p, v);
    }
    return out;
}

}  // namespace

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree() != b.degree()) {
        throw DomainError("group algebra size mismatch: S_" + std::to_string(a.degree()) + " vs S_" + std::to_string(b.degree()));
    }
    const int n = a.degree();
    if (a.is_zero() || b.is_zero()) return GroupAlgebraElement(n);
    ScaledTerms sa = scale(a);
    ScaledTerms sb = scale(b);
    Integer denominator = sa.denominator * sb.denominator;

    // Fast path: every partial sum bounded by max|a|·max|b|·min(|a|,|b|) < 2^120.
    Integer bound = sa.max_abs * sb.max_abs * static_cast<unsigned long>(std::min(sa.perms.size(), sb.perms.size()));
    if (sa.fits_int64 && sb.fits_int64 && mpz_sizeinbase(bound.get_mpz_t(), 2) < 120) {
        std::vector<__int128> an, bn;
        for (const auto& z : sa.numerators) an.push_back(z.get_si());
        for (const auto& z : sb.numerators) bn.push_back(z.get_si());
        return convolve<__int128>(n, sa, sb, an, bn, denominator);
    }
    return convolve<Integer>(n, sa, sb, sa.numerators, sb.numerators, denominator);
}

GroupAlgebraElement ga_power(const GroupAlgebraElement& a, unsigned e) {
    GroupAlgebraElement result = GroupAlgebraElement::identity(a.degree());
    GroupAlgebraElement base = a;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

}  // namespace nearcentral
