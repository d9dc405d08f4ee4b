#include "nearcentral/oracle.hpp"

#include <functional>
#include <mutex>
#include <sstream>

#include "nearcentral/characters.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/tableaux.hpp"

namespace nearcentral {

namespace {

void guard(int n, int max_n, const char* what) {
    if (n > max_n) {
        throw GuardExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds guard " + std::to_string(max_n));
    }
}

// All of S_n bucketed by marked type.
const std::map<MarkedPartition, std::vector<Permutation>>& marked_classes(int n) {
    static std::mutex mutex;
    static std::map<int, std::map<MarkedPartition, std::vector<Permutation>>> cache;
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(n);
    if (inserted) {
        for (auto& p : all_permutations(n)) it->second[p.marked_type()].push_back(p);
    }
    return it->second;
}

std::string describe(const GroupAlgebraElement& g, std::size_t limit = 12) {
    std::ostringstream os;
    os << "{";
    std::size_t shown = 0;
    for (const auto& [p, c] : g.terms()) {
        if (shown++ == limit) {
            os << ", ...";
            break;
        }
        if (shown > 1) os << ", ";
        os << p.to_cycle_string() << ": " << to_string(c);
    }
    os << "} (" << g.support_size() << " terms)";
    return os.str();
}

struct JmAlgebra {
    using value_type = GroupAlgebraElement;
    int n;
    std::vector<GroupAlgebraElement> jm;  // jm[k] = J_k, k >= 2

    std::pair<int, int> span(VariableRange r) const { return {2, r == VariableRange::inner ? n - 1 : n}; }

    GroupAlgebraElement constant(const Rational& c) const { return GroupAlgebraElement::identity(n) * c; }
    GroupAlgebraElement xn() const {
        if (n < 2) throw DomainError("x_n needs n >= 2");
        return jm[static_cast<std::size_t>(n)];
    }
    GroupAlgebraElement power_sum(int k, VariableRange r) const {
        auto [lo, hi] = span(r);
        GroupAlgebraElement total(n);
        for (int i = lo; i <= hi; ++i) total += ga_power(jm[static_cast<std::size_t>(i)], static_cast<unsigned>(k));
        return total;
    }
    GroupAlgebraElement elementary(int k, VariableRange r) const {
        // ∏ (1 + t J_i) truncated at t^k; the J_i commute.
        auto [lo, hi] = span(r);
        std::vector<GroupAlgebraElement> e{GroupAlgebraElement::identity(n)};
        for (int i = lo; i <= hi; ++i) {
            if (static_cast<int>(e.size()) <= k) e.emplace_back(n);
            for (std::size_t d = e.size() - 1; d > 0; --d) e[d] += e[d - 1] * jm[static_cast<std::size_t>(i)];
        }
        return static_cast<std::size_t>(k) < e.size() ? e[static_cast<std::size_t>(k)] : GroupAlgebraElement(n);
    }
    GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const { return a + b; }
    GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const { return a * b; }
    GroupAlgebraElement scale(const Rational& s, const GroupAlgebraElement& a) const { return a * s; }
    GroupAlgebraElement power(const GroupAlgebraElement& a, unsigned e) const { return ga_power(a, e); }
};

}  // namespace

GroupAlgebraElement class_sum(const MarkedPartition& lambda, int max_n) {
    const int n = lambda.size();
    guard(n, max_n, "class_sum");
    GroupAlgebraElement g(n);
    for (const auto& p : marked_classes(n).at(lambda)) g.add_term(p, 1);
    return g;
}

GroupAlgebraElement conjugacy_class_sum(const Partition& lambda, int max_n) {
    GroupAlgebraElement g(lambda.size());
    for (int i : lambda.distinct_parts()) g += class_sum({lambda, i}, max_n);
    return g;
}

GroupAlgebraElement jm_element(int k, int n) {
    if (k < 2 || k > n) throw DomainError("jm_element needs 2 <= k <= n");
    GroupAlgebraElement g(n);
    for (int i = 1; i < k; ++i) g.add_term(Permutation::transposition(n, i, k), 1);
    return g;
}

GroupAlgebraElement central_idempotent(const Partition& lambda, int max_n) {
    const int n = lambda.size();
    guard(n, max_n, "central_idempotent");
    GroupAlgebraElement g(n);
    if (n == 0) return GroupAlgebraElement::identity(0);
    const Rational scale(dimension(lambda), factorial(n));
    for (const auto& mu : enumerate_partitions(n)) {
        Rational c = scale * Rational(chi(lambda, mu));
        c.canonicalize();
        if (c == 0) continue;
        for (int i : mu.distinct_parts()) {
            for (const auto& p : marked_classes(n).at({mu, i})) g.add_term(p, c);
        }
    }
    return g;
}

GroupAlgebraElement z1_idempotent(const MarkedPartition& lambda, int max_n) {
    const int n = lambda.size();
    guard(n, max_n, "z1_idempotent");
    const Partition nu = decrement_part(lambda);
    GroupAlgebraElement lower = nu.empty() ? GroupAlgebraElement::identity(0) : central_idempotent(nu, max_n);
    return central_idempotent(lambda.shape, max_n) * lower.embed(n);
}

bool is_near_central(const GroupAlgebraElement& g) {
    const int n = g.degree();
    for (int k = 1; k + 1 <= n - 1; ++k) {
        const Permutation s = Permutation::transposition(n, k, k + 1);
        for (const auto& [p, c] : g.terms()) {
            if (g.coefficient(s * p * s) != c) return false;
        }
    }
    return true;
}

Rational extract_marked_coefficient(const GroupAlgebraElement& g, const MarkedPartition& mu) {
    const int n = g.degree();
    if (mu.size() != n) throw DomainError("extract_marked_coefficient: size mismatch");
    const auto& members = marked_classes(n).at(mu);
    Rational common = g.coefficient(members.front());
    for (const auto& p : members) {
        if (g.coefficient(p) != common) {
            throw NotNearCentral("coefficients differ across C_" + mu.to_string() + ": " + to_string(common) + " at " +
                                 members.front().to_cycle_string() + " vs " + to_string(g.coefficient(p)) + " at " +
                                 p.to_cycle_string());
        }
    }
    return common;
}

std::map<MarkedPartition, Rational> standard_basis_expansion(const GroupAlgebraElement& g) {
    std::map<MarkedPartition, Rational> out;
    for (const auto& mp : enumerate_marked_partitions(g.degree())) out.emplace(mp, extract_marked_coefficient(g, mp));
    return out;
}

Rational genchar_oracle(const MarkedPartition& upper, const MarkedPartition& lower, int max_n) {
    if (upper.size() != lower.size()) throw DomainError("genchar_oracle: size mismatch");
    const int n = upper.size();
    Rational scale(factorial(n), dimension(upper.shape));
    scale.canonicalize();
    return scale * extract_marked_coefficient(z1_idempotent(upper, max_n), lower);
}

std::map<MarkedPartition, Rational> jm_power_coefficients(int n, int r, int max_n) {
    if (n < 2) throw DomainError("jm_power_coefficients needs n >= 2");
    if (r < 0) throw DomainError("r must be nonnegative");
    guard(n, max_n, "jm_power_coefficients");
    const GroupAlgebraElement jn = jm_element(n, n);
    GroupAlgebraElement power = GroupAlgebraElement::identity(n);
    for (int k = 0; k < r; ++k) power = power * jn;
    return standard_basis_expansion(power);
}

Integer enumerate_star_factorizations(const Permutation& pi, int r, std::uint64_t limit) {
    const int n = pi.degree();
    if (n < 2) throw DomainError("star factorizations need n >= 2");
    if (r < 0) throw DomainError("r must be nonnegative");
    Integer space = ipow(Integer(n - 1), static_cast<unsigned>(r));
    if (space > Integer(static_cast<unsigned long>(limit))) {
        throw GuardExceeded("enumerate_star_factorizations: (n-1)^r = " + space.get_str() + " exceeds limit " +
                            std::to_string(limit));
    }
    std::vector<Permutation> stars;
    for (int j = 1; j < n; ++j) stars.push_back(Permutation::transposition(n, j, n));
    std::uint64_t count = 0;
    std::function<void(const Permutation&, int)> extend = [&](const Permutation& prefix, int remaining) {
        if (remaining == 0) {
            count += (prefix == pi);
            return;
        }
        for (const auto& t : stars) extend(prefix * t, remaining - 1);
    };
    extend(Permutation(n), r);
    return Integer(static_cast<unsigned long>(count));
}

GroupAlgebraElement evaluate_asf_at_jm(const AlmostSymmetricPoly& f, int n, int max_n) {
    guard(n, max_n, "evaluate_asf_at_jm");
    JmAlgebra algebra{n, std::vector<GroupAlgebraElement>(static_cast<std::size_t>(n) + 1, GroupAlgebraElement(n))};
    for (int k = 2; k <= n; ++k) algebra.jm[static_cast<std::size_t>(k)] = jm_element(k, n);
    return f.evaluate(algebra);
}

GroupAlgebraElement reconstruct_from_idempotents(const MarkedPartition& lambda, int max_n) {
    const int n = lambda.size();
    guard(n, max_n, "reconstruct_from_idempotents");
    GroupAlgebraElement total(n);
    const Rational size = marked_class_size(lambda);
    for (const auto& mu : enumerate_marked_partitions(n)) {
        Rational c = size * genchar(mu, lambda) / Rational(dimension(decrement_part(mu)));
        if (c == 0) continue;
        total += z1_idempotent(mu, max_n) * c;
    }
    return total;
}

namespace {

class Verifier {
public:
    explicit Verifier(std::ostream* progress) : progress_(progress) {}

    bool expect(bool ok, const std::function<std::string()>& detail) {
        ++report.checks;
        if (!ok && report.ok) {
            report.ok = false;
            report.first_failure = detail();
        }
        return ok;
    }
    template <typename A, typename B, typename Show>
    bool equal(const std::string& identity, const A& lhs, const B& rhs, Show show) {
        return expect(lhs == rhs, [&] { return identity + ": lhs = " + show(lhs) + ", rhs = " + show(rhs); });
    }
    void note(const std::string& line) {
        if (progress_) *progress_ << line << '\n';
    }

    VerifyReport report;

private:
    std::ostream* progress_;
};

void verify_n(int n, int max_n, Verifier& v) {
    auto show_ga = [](const GroupAlgebraElement& g) { return describe(g); };
    auto show_q = [](const Rational& q) { return to_string(q); };
    const auto partitions = enumerate_partitions(n);
    const auto marked = enumerate_marked_partitions(n);
    const auto id = GroupAlgebraElement::identity(n);
    const std::string at = " (n=" + std::to_string(n) + ")";

    // Central idempotents.
    std::map<Partition, GroupAlgebraElement> x;
    GroupAlgebraElement x_total(n);
    for (const auto& p : partitions) {
        x.emplace(p, central_idempotent(p, max_n));
        x_total += x.at(p);
    }
    v.equal("sum of X^lambda = 1" + at, x_total, id, show_ga);
    for (const auto& a : partitions) {
        for (const auto& b : partitions) {
            auto expected = a == b ? x.at(a) : GroupAlgebraElement(n);
            if (!v.equal("X^" + a.to_string() + " X^" + b.to_string() + at, x.at(a) * x.at(b), expected, show_ga)) return;
        }
    }

    // Z1 idempotents.
    std::map<MarkedPartition, GroupAlgebraElement> gamma;
    GroupAlgebraElement gamma_total(n);
    for (const auto& m : marked) {
        gamma.emplace(m, z1_idempotent(m, max_n));
        gamma_total += gamma.at(m);
        if (!v.expect(is_near_central(gamma.at(m)), [&] { return "Gamma^" + m.to_string() + " not near-central" + at; })) return;
    }
    v.equal("sum of Gamma = 1" + at, gamma_total, id, show_ga);
    for (const auto& a : marked) {
        for (const auto& b : marked) {
            auto expected = a == b ? gamma.at(a) : GroupAlgebraElement(n);
            if (!v.equal("Gamma^" + a.to_string() + " Gamma^" + b.to_string() + at, gamma.at(a) * gamma.at(b), expected,
                         show_ga))
                return;
        }
    }
    for (const auto& p : partitions) {
        GroupAlgebraElement s(n);
        for (int i : p.distinct_parts()) s += gamma.at({p, i});
        v.equal("sum_i Gamma^" + p.to_string() + ",i = X^" + p.to_string() + at, s, x.at(p), show_ga);
    }
    if (n >= 2) {
        const auto jn = jm_element(n, n);
        for (const auto& m : marked) {
            v.equal("J_n Gamma^" + m.to_string() + " = c Gamma" + at, jn * gamma.at(m),
                    gamma.at(m) * Rational(marked_content(m)), show_ga);
        }
    }

    // Generalized characters read from Γ against the convolution formula.
    for (const auto& upper : marked) {
        const Rational scale = Rational(factorial(n)) / Rational(dimension(upper.shape));
        for (const auto& lower : marked) {
            Rational literal = scale * extract_marked_coefficient(gamma.at(upper), lower);
            v.equal("gamma^" + upper.to_string() + "_" + lower.to_string() + " oracle vs strahov" + at, literal,
                    genchar_strahov(upper, lower, max_n), show_q);
        }
    }

    // Standard-to-idempotent round trip.
    if (n <= 5) {
        for (const auto& m : marked) {
            v.equal("K_" + m.to_string() + " from idempotents" + at, reconstruct_from_idempotents(m, max_n), class_sum(m, max_n),
                    show_ga);
        }
    }

    // J_n^r: mass and parity.
    for (int r = 0; r <= 6; ++r) {
        auto coeffs = jm_power_coefficients(n, r, max_n);
        Integer mass = 0;
        for (const auto& [m, c] : coeffs) {
            mass += marked_class_size(m) * require_integer(c, "jm_power_coefficients");
            if ((r - (n - m.shape.length())) % 2 != 0) {
                v.equal("[K_" + m.to_string() + "] J_n^" + std::to_string(r) + " parity" + at, c, Rational(0), show_q);
            }
        }
        v.equal("mass of J_n^" + std::to_string(r) + at, Rational(mass), Rational(ipow(Integer(n - 1), static_cast<unsigned>(r))),
                show_q);
    }

    // JM-basis polynomials.
    for (JmBasisRow row : kJmBasisRows) {
        if (n < jm_basis_min_n(row)) continue;
        auto shape = jm_basis_shape(row, n);
        v.equal("K_" + shape.to_string() + " as JM polynomial" + at, evaluate_asf_at_jm(jm_basis_row_poly(row, n), n, max_n),
                class_sum(shape, max_n), show_ga);
    }
    v.note("n = " + std::to_string(n) + ": " + std::to_string(v.report.checks) + " checks so far");
}

}  // namespace

VerifyReport verify(int max_n, std::ostream* progress) {
    if (max_n > default_max_n()) {
        throw GuardExceeded("verify: max-n " + std::to_string(max_n) + " exceeds guard " + std::to_string(default_max_n()));
    }
    Verifier v(progress);
    for (int n = 2; n <= max_n && v.report.ok; ++n) verify_n(n, max_n, v);
    return v.report;
}

}  // namespace nearcentral
