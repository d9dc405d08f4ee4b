#include "nearcentral/asf.hpp"

#include <algorithm>

#include "nearcentral/tableaux.hpp"

namespace nearcentral {

namespace {

using Node = AlmostSymmetricPoly::Node;
using Kind = AlmostSymmetricPoly::Kind;

std::shared_ptr<const Node> make(Kind kind, Rational value = 0, int degree = 0, VariableRange range = VariableRange::inner,
                                 std::vector<std::shared_ptr<const Node>> children = {}) {
    return std::make_shared<const Node>(Node{kind, std::move(value), degree, range, std::move(children)});
}

const char* range_name(VariableRange r) { return r == VariableRange::inner ? "inner" : "full"; }

std::string render(const Node& node) {
    switch (node.kind) {
        case Kind::constant: return to_string(node.value);
        case Kind::xn: return "x_n";
        case Kind::power_sum: return "p_" + std::to_string(node.degree) + "(" + range_name(node.range) + ")";
        case Kind::elementary: return "e_" + std::to_string(node.degree) + "(" + range_name(node.range) + ")";
        case Kind::sum: return "(" + render(*node.children[0]) + " + " + render(*node.children[1]) + ")";
        case Kind::product: return render(*node.children[0]) + "*" + render(*node.children[1]);
        case Kind::scaled: return to_string(node.value) + "*" + render(*node.children[0]);
        case Kind::power: return render(*node.children[0]) + "^" + std::to_string(node.degree);
    }
    return "?";
}

struct NumericAlgebra {
    using value_type = Rational;
    const std::vector<int>& inner;
    int x;

    std::vector<int> variables(VariableRange r) const {
        auto vars = inner;
        if (r == VariableRange::full) vars.push_back(x);
        return vars;
    }
    Rational constant(const Rational& c) const { return c; }
    Rational xn() const { return x; }
    Rational power_sum(int k, VariableRange r) const {
        Integer s = 0;
        for (int v : variables(r)) s += ipow(Integer(v), static_cast<unsigned>(k));
        return Rational(s);
    }
    Rational elementary(int k, VariableRange r) const {
        // [t^k] ∏ (1 + t v)
        std::vector<Integer> e{1};
        for (int v : variables(r)) {
            e.push_back(0);
            for (std::size_t d = e.size() - 1; d > 0; --d) e[d] += e[d - 1] * v;
        }
        return k >= 0 && static_cast<std::size_t>(k) < e.size() ? Rational(e[static_cast<std::size_t>(k)]) : Rational(0);
    }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational multiply(const Rational& a, const Rational& b) const { return a * b; }
    Rational scale(const Rational& s, const Rational& a) const { return s * a; }
    Rational power(const Rational& a, unsigned e) const { return rpow(a, e); }
};

}  // namespace

AlmostSymmetricPoly AlmostSymmetricPoly::constant(const Rational& c) { return AlmostSymmetricPoly(make(Kind::constant, c)); }
AlmostSymmetricPoly AlmostSymmetricPoly::xn() { return AlmostSymmetricPoly(make(Kind::xn)); }

AlmostSymmetricPoly AlmostSymmetricPoly::power_sum(int k, VariableRange range) {
    if (k < 1) throw DomainError("power sum index must be positive");
    return AlmostSymmetricPoly(make(Kind::power_sum, 0, k, range));
}

AlmostSymmetricPoly AlmostSymmetricPoly::elementary(int k, VariableRange range) {
    if (k < 0) throw DomainError("elementary index must be nonnegative");
    return AlmostSymmetricPoly(make(Kind::elementary, 0, k, range));
}

AlmostSymmetricPoly AlmostSymmetricPoly::pow(unsigned exponent) const {
    return AlmostSymmetricPoly(make(Kind::power, 0, static_cast<int>(exponent), VariableRange::inner, {node_}));
}

AlmostSymmetricPoly operator+(const AlmostSymmetricPoly& a, const AlmostSymmetricPoly& b) {
    return AlmostSymmetricPoly(make(Kind::sum, 0, 0, VariableRange::inner, {a.node_, b.node_}));
}

AlmostSymmetricPoly operator-(const AlmostSymmetricPoly& a, const AlmostSymmetricPoly& b) { return a + Rational(-1) * b; }

AlmostSymmetricPoly operator*(const AlmostSymmetricPoly& a, const AlmostSymmetricPoly& b) {
    return AlmostSymmetricPoly(make(Kind::product, 0, 0, VariableRange::inner, {a.node_, b.node_}));
}

AlmostSymmetricPoly operator*(const Rational& s, const AlmostSymmetricPoly& a) {
    return AlmostSymmetricPoly(make(Kind::scaled, s, 0, VariableRange::inner, {a.node_}));
}

std::string AlmostSymmetricPoly::to_string() const { return render(*node_); }

Rational evaluate_numeric(const AlmostSymmetricPoly& f, const std::vector<int>& inner, int xn) {
    NumericAlgebra algebra{inner, xn};
    return f.evaluate(algebra);
}

Rational evaluate_asf(const AlmostSymmetricPoly& f, const MarkedPartition& mu) {
    auto inner = contents(decrement_part(mu));
    if (auto zero = std::find(inner.begin(), inner.end(), 0); zero != inner.end()) inner.erase(zero);
    return evaluate_numeric(f, inner, marked_content(mu));
}

int jm_basis_min_n(JmBasisRow row) {
    switch (row) {
        case JmBasisRow::transposition_at_n: return 2;
        case JmBasisRow::transposition_fixed: return 3;
        case JmBasisRow::three_cycle_at_n: return 3;
        case JmBasisRow::double_transposition_at_n: return 4;
        case JmBasisRow::three_cycle_fixed: return 4;
        case JmBasisRow::double_transposition_fixed: return 5;
        case JmBasisRow::full_cycle: return 2;
        case JmBasisRow::long_cycle_fixed: return 2;
    }
    return 0;
}

MarkedPartition jm_basis_shape(JmBasisRow row, int n) {
    if (n < jm_basis_min_n(row)) throw UnsupportedPattern("JM basis row not defined at n = " + std::to_string(n));
    auto with_ones = [n](std::vector<int> head) {
        int used = 0;
        for (int x : head) used += x;
        head.insert(head.end(), static_cast<std::size_t>(n - used), 1);
        return Partition(std::move(head));
    };
    switch (row) {
        case JmBasisRow::transposition_at_n: return {with_ones({2}), 2};
        case JmBasisRow::transposition_fixed: return {with_ones({2}), 1};
        case JmBasisRow::three_cycle_at_n: return {with_ones({3}), 3};
        case JmBasisRow::double_transposition_at_n: return {with_ones({2, 2}), 2};
        case JmBasisRow::three_cycle_fixed: return {with_ones({3}), 1};
        case JmBasisRow::double_transposition_fixed: return {with_ones({2, 2}), 1};
        case JmBasisRow::full_cycle: return {Partition{n}, n};
        case JmBasisRow::long_cycle_fixed: return {with_ones({n - 1}), 1};
    }
    throw UnsupportedPattern("unknown JM basis row");
}

AlmostSymmetricPoly jm_basis_row_poly(JmBasisRow row, int n) {
    jm_basis_shape(row, n);  // range check
    using P = AlmostSymmetricPoly;
    const auto x = P::xn();
    const auto p1 = P::power_sum(1, VariableRange::inner);
    const auto p2 = P::power_sum(2, VariableRange::inner);
    const Rational n_minus_1 = n - 1;
    const Rational pairs(binomial(n - 1, 2));
    switch (row) {
        case JmBasisRow::transposition_at_n: return x;
        case JmBasisRow::transposition_fixed: return p1;
        case JmBasisRow::three_cycle_at_n: return x.pow(2) - P::constant(n_minus_1);
        case JmBasisRow::double_transposition_at_n: return p1 * x - x.pow(2) + P::constant(n_minus_1);
        case JmBasisRow::three_cycle_fixed: return p2 - P::constant(pairs);
        case JmBasisRow::double_transposition_fixed:
            return Rational(1, 2) * (p1.pow(2) - Rational(3) * p2) + P::constant(pairs);
        case JmBasisRow::full_cycle: return P::elementary(n - 1, VariableRange::full);
        case JmBasisRow::long_cycle_fixed: return P::elementary(n - 2, VariableRange::inner);
    }
    throw UnsupportedPattern("unknown JM basis row");
}

AlmostSymmetricPoly jm_basis_poly(const MarkedPartition& lambda) {
    const int n = lambda.size();
    for (JmBasisRow row : kJmBasisRows) {
        if (n >= jm_basis_min_n(row) && jm_basis_shape(row, n) == lambda) return jm_basis_row_poly(row, n);
    }
    throw UnsupportedPattern("no JM basis row for " + lambda.to_string());
}

}  // namespace nearcentral
