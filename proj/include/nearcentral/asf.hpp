#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nearcentral/partitions.hpp"

namespace nearcentral {

/// Which variables a symmetric generator ranges over.
/// inner = x_2..x_{n-1}, full = x_2..x_n.
enum class VariableRange { inner, full };

/// Polynomial in x_n and symmetric generators of the inner variables.
///
/// Symmetric in x_2..x_{n-1} by construction: the only leaves are rational
/// constants, x_n, power sums p_k and elementary polynomials e_k.
/// Immutable; subtrees are shared.
class AlmostSymmetricPoly {
public:
    enum class Kind { constant, xn, power_sum, elementary, sum, product, scaled, power };

    struct Node {
        Kind kind;
        Rational value;          // constant, scaled
        int degree = 0;          // power_sum/elementary index, power exponent
        VariableRange range = VariableRange::inner;
        std::vector<std::shared_ptr<const Node>> children;
    };

    static AlmostSymmetricPoly constant(const Rational& c);
    static AlmostSymmetricPoly xn();
    static AlmostSymmetricPoly power_sum(int k, VariableRange range);
    static AlmostSymmetricPoly elementary(int k, VariableRange range);

    AlmostSymmetricPoly pow(unsigned exponent) const;

    friend AlmostSymmetricPoly operator+(const AlmostSymmetricPoly& a, const AlmostSymmetricPoly& b);
    friend AlmostSymmetricPoly operator-(const AlmostSymmetricPoly& a, const AlmostSymmetricPoly& b);
    friend AlmostSymmetricPoly operator*(const AlmostSymmetricPoly& a, const AlmostSymmetricPoly& b);
    friend AlmostSymmetricPoly operator*(const Rational& s, const AlmostSymmetricPoly& a);

    const Node& root() const { return *node_; }
    std::string to_string() const;

    /// Folds the tree through an algebra providing constant/xn/power_sum/
    /// elementary/add/multiply/scale/power over its `value_type`.
    template <typename Algebra>
    typename Algebra::value_type evaluate(Algebra& algebra) const {
        return fold(*node_, algebra);
    }

private:
    explicit AlmostSymmetricPoly(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    template <typename Algebra>
    static typename Algebra::value_type fold(const Node& node, Algebra& algebra) {
        switch (node.kind) {
            case Kind::constant: return algebra.constant(node.value);
            case Kind::xn: return algebra.xn();
            case Kind::power_sum: return algebra.power_sum(node.degree, node.range);
            case Kind::elementary: return algebra.elementary(node.degree, node.range);
            case Kind::sum: return algebra.add(fold(*node.children[0], algebra), fold(*node.children[1], algebra));
            case Kind::product: return algebra.multiply(fold(*node.children[0], algebra), fold(*node.children[1], algebra));
            case Kind::scaled: return algebra.scale(node.value, fold(*node.children[0], algebra));
            case Kind::power: return algebra.power(fold(*node.children[0], algebra), static_cast<unsigned>(node.degree));
        }
        throw std::logic_error("unknown node kind");
    }

    std::shared_ptr<const Node> node_;
};

/// Numeric evaluation with the inner variables set to `inner` (any order)
/// and x_n set to `xn`; full-range generators see inner ∪ {xn}.
Rational evaluate_numeric(const AlmostSymmetricPoly& f, const std::vector<int>& inner, int xn);

/// f(c_{j₋(μ)}, c_{μ,j}): inner variables are the contents of j₋(μ) with one
/// copy of 0 removed (the cell holding 1), x_n is the marked content.
Rational evaluate_asf(const AlmostSymmetricPoly& f, const MarkedPartition& mu);

/// The JM basis rows: K_{λ,i} as an almost symmetric polynomial in J_2..J_n.
enum class JmBasisRow {
    transposition_at_n,   // (2,1^{n-2}),2 = J_n
    transposition_fixed,  // (2,1^{n-2}),1 = p_1(inner)
    three_cycle_at_n,     // (3,1^{n-3}),3
    double_transposition_at_n,  // (2,2,1^{n-4}),2
    three_cycle_fixed,    // (3,1^{n-3}),1
    double_transposition_fixed,  // (2,2,1^{n-4}),1
    full_cycle,           // (n),n = e_{n-1}(full)
    long_cycle_fixed,     // (n-1,1),1 = e_{n-2}(inner)
};

inline constexpr JmBasisRow kJmBasisRows[] = {
    JmBasisRow::transposition_at_n, JmBasisRow::transposition_fixed, JmBasisRow::three_cycle_at_n,
    JmBasisRow::double_transposition_at_n, JmBasisRow::three_cycle_fixed, JmBasisRow::double_transposition_fixed,
    JmBasisRow::full_cycle, JmBasisRow::long_cycle_fixed,
};

/// Smallest n at which the row's marked partition exists.
int jm_basis_min_n(JmBasisRow row);
/// The row's marked partition at size n; throws UnsupportedPattern below the minimum.
MarkedPartition jm_basis_shape(JmBasisRow row, int n);
AlmostSymmetricPoly jm_basis_row_poly(JmBasisRow row, int n);

/// First JM basis row whose shape equals (λ,i); UnsupportedPattern if none.
AlmostSymmetricPoly jm_basis_poly(const MarkedPartition& lambda);

}  // namespace nearcentral
