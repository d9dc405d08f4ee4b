#include "nearcentral/genchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "nearcentral/characters.hpp"
#include "nearcentral/tableaux.hpp"

namespace nearcentral {

namespace {

void check_same_n(const MarkedPartition& a, const MarkedPartition& b) {
    if (a.size() != b.size()) {
        throw DomainError("marked partitions " + a.to_string() + " and " + b.to_string() + " have different sizes");
    }
}

// (a, 2, 1^{k-1}) with a >= 2, k >= 1; returns k.
std::optional<int> two_part_hook_k(const Partition& mu) {
    if (mu.length() < 2 || mu[1] != 2) return std::nullopt;
    if (!std::all_of(mu.parts().begin() + 2, mu.parts().end(), [](int x) { return x == 1; })) return std::nullopt;
    return mu.length() - 1;
}

// k for the hook (n-k, 1^k).
std::optional<int> hook_k(const Partition& mu) {
    if (!mu.is_hook()) return std::nullopt;
    return mu.size() - mu[0];
}

Partition with_ones(std::vector<int> head, int n) {
    int used = std::accumulate(head.begin(), head.end(), 0);
    head.insert(head.end(), static_cast<std::size_t>(n - used), 1);
    return Partition(std::move(head));
}

struct CharacterRows {
    std::map<Partition, Integer> upper;  // χ^μ on classes of S_n
    std::map<Partition, Integer> lower;  // χ^{j₋(μ)} on classes of S_{n-1}
};

std::mutex cache_mutex;
std::map<std::pair<MarkedPartition, MarkedPartition>, Rational> strahov_cache;
std::map<std::pair<MarkedPartition, MarkedPartition>, Rational> dispatch_cache;

Rational strahov_sum(const MarkedPartition& upper, const Permutation& pi, int max_n) {
    const int n = upper.size();
    if (pi.degree() != n) throw DomainError("representative degree does not match " + upper.to_string());
    if (n > max_n) {
        throw GuardExceeded("genchar_strahov: n = " + std::to_string(n) + " exceeds guard " + std::to_string(max_n));
    }
    const Partition nu = decrement_part(upper);
    CharacterRows rows;
    for (const auto& p : enumerate_partitions(n)) rows.upper.emplace(p, chi(upper.shape, p));
    for (const auto& p : enumerate_partitions(n - 1)) rows.lower.emplace(p, chi(nu, p));

    Integer total = 0;
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    // σ ranges over S_{n-1}: permute the first n-1 symbols, n stays fixed.
    do {
        Permutation sigma = Permutation::from_one_line(line);
        Partition sigma_type = remove_part(sigma.cycle_type(), 1);
        const Integer& lower_value = rows.lower.at(sigma_type);
        if (lower_value == 0) continue;
        total += rows.upper.at((pi * sigma.inverse()).cycle_type()) * lower_value;
    } while (std::next_permutation(line.begin(), line.end() - 1));

    Rational value(dimension(nu) * total, factorial(n - 1));
    value.canonicalize();
    return value;
}

}  // namespace

Permutation canonical_representative(const MarkedPartition& lower) {
    const int n = lower.size();
    std::vector<std::vector<int>> cycles;
    std::vector<int> marked;
    int next = 1;
    for (int k = 0; k < lower.mark - 1; ++k) marked.push_back(next++);
    marked.push_back(n);
    cycles.push_back(std::move(marked));
    const Partition rest = remove_part(lower.shape, lower.mark);
    for (int len : rest.parts()) {
        std::vector<int> cyc;
        for (int k = 0; k < len; ++k) cyc.push_back(next++);
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(n, cycles);
}

Rational genchar_strahov(const MarkedPartition& upper, const Permutation& representative, int max_n) {
    return strahov_sum(upper, representative, max_n);
}

Rational genchar_strahov(const MarkedPartition& upper, const MarkedPartition& lower, int max_n) {
    check_same_n(upper, lower);
    if (lower.size() > max_n) {
        throw GuardExceeded("genchar_strahov: n = " + std::to_string(lower.size()) + " exceeds guard " + std::to_string(max_n));
    }
    auto key = std::make_pair(upper, lower);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = strahov_cache.find(key); it != strahov_cache.end()) return it->second;
    }
    Rational value = strahov_sum(upper, canonical_representative(lower), max_n);
    std::lock_guard lock(cache_mutex);
    strahov_cache.emplace(std::move(key), value);
    return value;
}

int closed_form_min_n(ClosedFormRow row) {
    switch (row) {
        case ClosedFormRow::transposition_at_n: return 2;
        case ClosedFormRow::transposition_fixed: return 3;
        case ClosedFormRow::three_cycle_at_n: return 3;
        case ClosedFormRow::double_transposition_at_n: return 4;
        case ClosedFormRow::three_cycle_fixed: return 4;
        case ClosedFormRow::double_transposition_fixed: return 5;
        case ClosedFormRow::full_cycle: return 2;
        case ClosedFormRow::long_cycle_fixed: return 2;
    }
    return 0;
}

MarkedPartition closed_form_shape(ClosedFormRow row, int n) {
    if (n < closed_form_min_n(row)) throw UnsupportedPattern("closed-form row not defined at n = " + std::to_string(n));
    switch (row) {
        case ClosedFormRow::transposition_at_n: return {with_ones({2}, n), 2};
        case ClosedFormRow::transposition_fixed: return {with_ones({2}, n), 1};
        case ClosedFormRow::three_cycle_at_n: return {with_ones({3}, n), 3};
        case ClosedFormRow::double_transposition_at_n: return {with_ones({2, 2}, n), 2};
        case ClosedFormRow::three_cycle_fixed: return {with_ones({3}, n), 1};
        case ClosedFormRow::double_transposition_fixed: return {with_ones({2, 2}, n), 1};
        case ClosedFormRow::full_cycle: return {Partition{n}, n};
        case ClosedFormRow::long_cycle_fixed: return {with_ones({n - 1}, n), 1};
    }
    throw UnsupportedPattern("unknown closed-form row");
}

Rational closed_form_row_value(ClosedFormRow row, const MarkedPartition& upper) {
    const int n = upper.size();
    closed_form_shape(row, n);  // range check
    const Partition nu = decrement_part(upper);
    const Rational d = dimension(nu);
    const Rational c = marked_content(upper);
    const ContentSums sums = content_sums(nu);
    const Rational s = sums.sum;
    const Rational s2 = sums.sum_squares;
    const Rational n1 = n - 1;

    switch (row) {
        case ClosedFormRow::transposition_at_n: return c * d / n1;
        case ClosedFormRow::transposition_fixed: return s * d / Rational(binomial(n - 1, 2));
        case ClosedFormRow::three_cycle_at_n:
            return (c * c - n + 1) * d / (2 * Rational(binomial(n - 1, 2)));
        case ClosedFormRow::double_transposition_at_n:
            // |C_{(2,2,1^{n-4}),2}| = (n-1) C(n-2,2)
            return (s * c - c * c + n - 1) * d / (n1 * Rational(binomial(n - 2, 2)));
        case ClosedFormRow::three_cycle_fixed:
            return (s2 - Rational(binomial(n - 1, 2))) * d / (2 * Rational(binomial(n - 1, 3)));
        case ClosedFormRow::double_transposition_fixed:
            return (s * s - 3 * s2 + Rational((n - 1) * (n - 2))) * d / (6 * Rational(binomial(n - 1, 4)));
        case ClosedFormRow::full_cycle: {
            auto k = hook_k(upper.shape);
            if (!k) return 0;
            if (upper.mark == 1 && *k >= 1) return Rational(sign_power(*k) * *k) / n1;
            if (upper.mark == n - *k) return Rational(sign_power(*k) * (n - *k - 1)) / n1;
            return 0;
        }
        case ClosedFormRow::long_cycle_fixed: {
            if (auto k = two_part_hook_k(upper.shape); k && upper.mark == 2) return sign_power(*k);
            auto k = hook_k(upper.shape);
            if (!k) return 0;
            if (upper.mark == 1 && *k >= 1) return sign_power(*k - 1);
            if (upper.mark == n - *k) return sign_power(*k);
            return 0;
        }
    }
    throw UnsupportedPattern("unknown closed-form row");
}

std::optional<Rational> try_genchar_closed_form(const MarkedPartition& upper, const MarkedPartition& lower) {
    check_same_n(upper, lower);
    const int n = lower.size();
    for (ClosedFormRow row : kClosedFormRows) {
        if (n >= closed_form_min_n(row) && closed_form_shape(row, n) == lower) return closed_form_row_value(row, upper);
    }
    return std::nullopt;
}

Rational genchar_closed_form(const MarkedPartition& upper, const MarkedPartition& lower) {
    if (auto v = try_genchar_closed_form(upper, lower)) return *v;
    throw UnsupportedPattern("no closed form for class " + lower.to_string());
}

Rational genchar_hook_row(const MarkedPartition& upper) {
    const int n = upper.size();
    if (n < 3) throw UnsupportedPattern("hook-row formula needs n >= 3");
    const Partition& mu = upper.shape;
    const int j = upper.mark;
    if (mu == Partition{n}) return 1;
    if (mu == Partition::repeated(1, n)) return sign_power(n);
    if (auto k = hook_k(mu)) {
        if (j == n - *k) return Rational(sign_power(*k + 1), n - 1);
        if (j == 1) return Rational(sign_power(*k), n - 1);
        return 0;
    }
    if (auto k = two_part_hook_k(mu)) {
        if (j == 2) return Rational(sign_power(*k), *k * (n - *k - 2));
        // The remaining marks of (n-k-1,2,1^{k-1}) come from
        // γ = (n d_{j₋(μ)} χ^μ_{(n-1,1)} / d_μ - γ^{μ,j}_{(n-1,1),1}) / (n-1), where the second term vanishes.
        Rational v(n * dimension(decrement_part(upper)), (n - 1) * dimension(mu));
        v.canonicalize();
        return sign_power(*k) * v;
    }
    return 0;
}

Rational genchar(const MarkedPartition& upper, const MarkedPartition& lower, GenCharMethod method) {
    check_same_n(upper, lower);
    const int n = lower.size();
    const bool hook_row_applies = n >= 3 && lower == MarkedPartition(with_ones({n - 1}, n), n - 1);
    switch (method) {
        case GenCharMethod::strahov: return genchar_strahov(upper, lower);
        case GenCharMethod::table:
            if (auto v = try_genchar_closed_form(upper, lower)) return *v;
            if (hook_row_applies) return genchar_hook_row(upper);
            throw UnsupportedPattern("no closed form for class " + lower.to_string());
        case GenCharMethod::automatic: break;
    }
    auto key = std::make_pair(upper, lower);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = dispatch_cache.find(key); it != dispatch_cache.end()) return it->second;
    }
    Rational value;
    if (auto v = try_genchar_closed_form(upper, lower)) {
        value = *v;
    } else if (hook_row_applies) {
        value = genchar_hook_row(upper);
    } else {
        value = genchar_strahov(upper, lower);
    }
    std::lock_guard lock(cache_mutex);
    dispatch_cache.emplace(std::move(key), value);
    return value;
}

Rational superscript_sum(const Partition& mu, const MarkedPartition& lower) {
    if (mu.size() != lower.size()) throw DomainError("superscript_sum: size mismatch");
    Rational total = 0;
    for (int j : mu.distinct_parts()) total += genchar({mu, j}, lower);
    return total;
}

Rational subscript_sum_chi(const MarkedPartition& upper, const Partition& lambda) {
    if (upper.size() != lambda.size()) throw DomainError("subscript_sum_chi: size mismatch");
    Rational total = 0;
    for (int i : lambda.distinct_parts()) {
        MarkedPartition lower(lambda, i);
        total += Rational(marked_class_size(lower)) * genchar(upper, lower);
    }
    Rational scale(dimension(upper.shape), class_size(lambda) * dimension(decrement_part(upper)));
    scale.canonicalize();
    return scale * total;
}

Rational weighted_sum(const MarkedPartition& upper, int parts) {
    const int n = upper.size();
    Rational total = 0;
    for (const auto& lower : enumerate_marked_partitions(n)) {
        if (lower.shape.length() != parts) continue;
        total += Rational(marked_class_size(lower)) * genchar(upper, lower);
    }
    return total / Rational(dimension(decrement_part(upper)));
}

Rational multi_product_coefficient(std::span<const MarkedPartition> factors, const MarkedPartition& target) {
    if (factors.empty()) throw DomainError("multi_product_coefficient needs at least one factor");
    const int n = target.size();
    for (const auto& f : factors) check_same_n(f, target);
    const auto r = static_cast<unsigned>(factors.size());
    Integer class_product = 1;
    for (const auto& f : factors) class_product *= marked_class_size(f);

    Rational total = 0;
    for (const auto& rho : enumerate_marked_partitions(n)) {
        Rational term = genchar(rho, target) * Rational(dimension(rho.shape));
        if (term == 0) continue;
        for (const auto& f : factors) {
            term *= genchar(rho, f);
            if (term == 0) break;
        }
        if (term == 0) continue;
        term /= Rational(ipow(dimension(decrement_part(rho)), r));
        total += term;
    }
    return total * Rational(class_product) / Rational(factorial(n));
}

Rational connection_coefficient(const MarkedPartition& a, const MarkedPartition& b, const MarkedPartition& c) {
    check_same_n(a, b);
    check_same_n(a, c);
    const int n = a.size();
    Rational total = 0;
    for (const auto& rho : enumerate_marked_partitions(n)) {
        Rational term = genchar(rho, a) * genchar(rho, b) * genchar(rho, c);
        if (term == 0) continue;
        Integer d_lower = dimension(decrement_part(rho));
        total += term * Rational(dimension(rho.shape)) / Rational(d_lower * d_lower);
    }
    Rational value = total * Rational(marked_class_size(a) * marked_class_size(b)) / Rational(factorial(n));
    Integer z = require_integer(value, "connection_coefficient");
    if (z < 0) throw std::logic_error("connection_coefficient: negative value " + to_string(value));
    return value;
}

Rational orthogonality_check(const MarkedPartition& a, const MarkedPartition& b) {
    check_same_n(a, b);
    const int n = a.size();
    Rational total = 0;
    for (const auto& rho : enumerate_marked_partitions(n)) {
        total += Rational(marked_class_size(rho)) * genchar(a, rho) * genchar(b, rho);
    }
    return total / Rational(factorial(n));
}

}  // namespace nearcentral
