#include "nearcentral/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace nearcentral {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x < 1) throw DomainError("partition parts must be positive");
        n_ += x;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::repeated(int part, int count) {
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), part));
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::distinct_parts() const {
    std::vector<int> out;
    for (int x : parts_) {
        if (out.empty() || out.back() != x) out.push_back(x);
    }
    return out;
}

bool Partition::is_hook() const {
    return !parts_.empty() && std::all_of(parts_.begin() + 1, parts_.end(), [](int x) { return x == 1; });
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(parts_[k]);
    }
    return s;
}

namespace {

int parse_int(std::string_view tok) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw DomainError("not an integer: '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.find_first_not_of(' ') == std::string_view::npos) return Partition();
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        parts.push_back(parse_int(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
        throw DomainError("partition parts must be weakly decreasing: '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

MarkedPartition::MarkedPartition(Partition s, int m) : shape(std::move(s)), mark(m) {
    if (!shape.contains(mark)) {
        throw DomainError(std::to_string(mark) + " is not a part of (" + shape.to_string() + ")");
    }
}

std::string MarkedPartition::to_string() const { return shape.to_string() + "@" + std::to_string(mark); }

MarkedPartition MarkedPartition::parse(std::string_view text) {
    auto at = text.find('@');
    if (at == std::string_view::npos) throw DomainError("marked partition must look like '3,1,1@1'");
    return MarkedPartition(Partition::parse(text.substr(0, at)), parse_int(text.substr(at + 1)));
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw DomainError("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            rec(remaining - k, k);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<MarkedPartition> enumerate_marked_partitions(int n) {
    if (n < 1) throw DomainError("n must be positive");
    std::vector<MarkedPartition> out;
    for (const auto& p : enumerate_partitions(n)) {
        for (int i : p.distinct_parts()) out.emplace_back(p, i);
    }
    return out;
}

Partition remove_part(const Partition& lambda, int part) {
    auto parts = lambda.parts();
    auto it = std::find(parts.begin(), parts.end(), part);
    if (it == parts.end()) {
        throw DomainError(std::to_string(part) + " is not a part of (" + lambda.to_string() + ")");
    }
    parts.erase(it);
    return Partition(std::move(parts));
}

Partition add_part(const Partition& lambda, int part) {
    if (part < 1) throw DomainError("added part must be positive");
    auto parts = lambda.parts();
    parts.push_back(part);
    return Partition(std::move(parts));
}

Partition decrement_part(const Partition& lambda, int part) {
    auto reduced = remove_part(lambda, part);
    return part > 1 ? add_part(reduced, part - 1) : reduced;
}

namespace {

Integer centralizer_order(const Partition& lambda) {
    Integer z = 1;
    for (int i : lambda.distinct_parts()) {
        int m = lambda.multiplicity(i);
        z *= ipow(Integer(i), static_cast<unsigned>(m)) * factorial(m);
    }
    return z;
}

}  // namespace

Integer class_size(const Partition& lambda) { return factorial(lambda.size()) / centralizer_order(lambda); }

Integer marked_class_size(const Partition& lambda, int part) {
    int m = lambda.multiplicity(part);
    if (m == 0) throw DomainError(std::to_string(part) + " is not a part of (" + lambda.to_string() + ")");
    return factorial(lambda.size() - 1) * part * m / centralizer_order(lambda);
}

}  // namespace nearcentral
