#include "nearcentral/series.hpp"

namespace nearcentral {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coefficients) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coefficients.size() && k < coeffs_.size(); ++k) coeffs_[k] = coefficients[k];
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::exp(const Rational& a, int order) {
    TruncatedSeries s(order);
    Rational term = 1;
    for (int k = 0; k <= order; ++k) {
        s.coeffs_[static_cast<std::size_t>(k)] = term;
        term *= a / (k + 1);
    }
    return s;
}

TruncatedSeries TruncatedSeries::sinh(const Rational& a, int order) {
    TruncatedSeries s = exp(a, order);
    for (int k = 0; k <= order; k += 2) s.coeffs_[static_cast<std::size_t>(k)] = 0;
    return s;
}

TruncatedSeries TruncatedSeries::cosh(const Rational& a, int order) {
    TruncatedSeries s = exp(a, order);
    for (int k = 1; k <= order; k += 2) s.coeffs_[static_cast<std::size_t>(k)] = 0;
    return s;
}

const Rational& TruncatedSeries::operator[](int k) const {
    if (k < 0 || k > order_) {
        throw DomainError("coefficient x^" + std::to_string(k) + " beyond series order " + std::to_string(order_));
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational TruncatedSeries::extract(int k) const { return (*this)[k] * Rational(factorial(k)); }

void TruncatedSeries::check_order(const TruncatedSeries& rhs) const {
    if (order_ != rhs.order_) throw DomainError("series orders differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    check_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    check_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
    check_order(rhs);
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; a + b < coeffs_.size(); ++b) out[a + b] += coeffs_[a] * rhs.coeffs_[b];
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries result = constant(1, order_);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

}  // namespace nearcentral
