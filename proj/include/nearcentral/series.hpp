#pragma once

#include <vector>

#include "nearcentral/numeric.hpp"

namespace nearcentral {

/// Exact power series in x modulo x^{order+1}.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coefficients);

    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries exp(const Rational& a, int order);   // e^{ax}
    static TruncatedSeries sinh(const Rational& a, int order);  // sinh(ax)
    static TruncatedSeries cosh(const Rational& a, int order);  // cosh(ax)

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// [x^k]; throws DomainError when k exceeds the order.
    const Rational& operator[](int k) const;
    /// k!·[x^k]
    Rational extract(int k) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& s);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Binary powering; pow(0) is 1.
    TruncatedSeries pow(unsigned e) const;

private:
    void check_order(const TruncatedSeries& rhs) const;

    int order_;
    std::vector<Rational> coeffs_;
};

}  // namespace nearcentral
