#include "nearcentral/starcount.hpp"

#include "nearcentral/characters.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/tableaux.hpp"

namespace nearcentral {

namespace {

Rational content_power(const MarkedPartition& m, int r) {
    return Rational(ipow(Integer(marked_content(m)), static_cast<unsigned>(r)));
}

void check_r(int r) {
    if (r < 0) throw DomainError("r must be nonnegative");
}

}  // namespace

Integer star_count(const MarkedPartition& lambda, int r) {
    check_r(r);
    const int n = lambda.size();
    Rational total = 0;
    for (const auto& mu : enumerate_marked_partitions(n)) {
        Rational c = content_power(mu, r);
        if (c == 0) continue;
        total += Rational(dimension(mu.shape)) * genchar(mu, lambda) * c;
    }
    return require_integer(total / Rational(factorial(n)), "star_count");
}

ClosedCase parse_closed_case(std::string_view name) {
    if (name == "full-cycle") return ClosedCase::full_cycle;
    if (name == "fix-point-mark1") return ClosedCase::fix_point_mark1;
    if (name == "transposed-mark") return ClosedCase::transposed_mark;
    throw DomainError("unknown case '" + std::string(name) + "' (full-cycle, fix-point-mark1, transposed-mark)");
}

std::string_view closed_case_name(ClosedCase c) {
    switch (c) {
        case ClosedCase::full_cycle: return "full-cycle";
        case ClosedCase::fix_point_mark1: return "fix-point-mark1";
        case ClosedCase::transposed_mark: return "transposed-mark";
    }
    return "?";
}

MarkedPartition closed_case_shape(ClosedCase c, int n) {
    if (n < 3) throw DomainError("closed forms need n >= 3");
    switch (c) {
        case ClosedCase::full_cycle: return {Partition{n}, n};
        case ClosedCase::fix_point_mark1: return {Partition{n - 1, 1}, 1};
        case ClosedCase::transposed_mark: return {Partition{n - 1, 1}, n - 1};
    }
    throw DomainError("unknown closed case");
}

TruncatedSeries transitive_series(int n, int order) {
    return TruncatedSeries::sinh(Rational(n - 1, 2), order) * TruncatedSeries::sinh(Rational(1, 2), order).pow(static_cast<unsigned>(n - 1));
}

Integer star_count_closed(ClosedCase c, int n, int r, int extra_order) {
    if (n < 3) throw DomainError("closed forms need n >= 3");
    if (r < 1) throw DomainError("closed forms need r >= 1");
    const int order = r + 1 + extra_order;
    const Rational two_n(ipow(Integer(2), static_cast<unsigned>(n)));
    const Rational n_fact(factorial(n));
    switch (c) {
        case ClosedCase::full_cycle: {
            Rational v = two_n * transitive_series(n, order).extract(r + 1) / (n_fact * (n - 1));
            return require_integer(v, "star_count_closed(full-cycle)");
        }
        case ClosedCase::fix_point_mark1: {
            Rational v = two_n * transitive_series(n, order).extract(r) / n_fact;
            return require_integer(v, "star_count_closed(fix-point-mark1)");
        }
        case ClosedCase::transposed_mark: {
            TruncatedSeries hyperbolic = (n % 2 == 0) ? TruncatedSeries::cosh(n - 1, order) : TruncatedSeries::sinh(n - 1, order);
            TruncatedSeries f = Rational(2 * n) * hyperbolic - two_n * transitive_series(n, order);
            // Marks j != 2 of (n-k-1, 2, 1^{k-1}) also contribute, with contents n-k-2 and -k.
            for (int k = 1; n - k - 1 >= 2; ++k) {
                const int first = n - k - 1;
                const Rational sign = sign_power(k);
                if (first >= 3) {
                    std::vector<int> shape{first - 1, 2};
                    shape.insert(shape.end(), static_cast<std::size_t>(k - 1), 1);
                    f += Rational(n) * sign * Rational(dimension(Partition(shape))) * TruncatedSeries::exp(n - k - 2, order);
                }
                if (k >= 2) {
                    std::vector<int> shape{first, 2};
                    shape.insert(shape.end(), static_cast<std::size_t>(k - 2), 1);
                    f += Rational(n) * sign * Rational(dimension(Partition(shape))) * TruncatedSeries::exp(-k, order);
                }
            }
            Rational v = f.extract(r) / (n_fact * (n - 1));
            return require_integer(v, "star_count_closed(transposed-mark)");
        }
    }
    throw DomainError("unknown closed case");
}

Integer star_count_class(const Partition& lambda, int r) {
    check_r(r);
    const int n = lambda.size();
    Rational total = 0;
    for (const auto& mu : enumerate_partitions(n)) {
        Integer inner = 0;
        for (int j : mu.distinct_parts()) {
            MarkedPartition m(mu, j);
            inner += dimension(decrement_part(m)) * ipow(Integer(marked_content(m)), static_cast<unsigned>(r));
        }
        if (inner == 0) continue;
        total += Rational(inner * chi(mu, lambda));
    }
    return require_integer(total * Rational(class_size(lambda)) / Rational(factorial(n)), "star_count_class");
}

Integer star_count_by_cycle_count(int n, int k, int r) {
    check_r(r);
    if (k < 1 || k > n) throw DomainError("cycle count k must satisfy 1 <= k <= n");
    Rational total = 0;
    for (const auto& mu : enumerate_marked_partitions(n)) {
        Integer c = ipow(Integer(marked_content(mu)), static_cast<unsigned>(r));
        if (c == 0) continue;
        const auto poly = content_polynomial(mu.shape);
        total += Rational(dimension(mu.shape) * dimension(decrement_part(mu)) * c * poly[static_cast<std::size_t>(k)]);
    }
    return require_integer(total / Rational(factorial(n)), "star_count_by_cycle_count");
}

}  // namespace nearcentral
