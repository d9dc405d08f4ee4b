#include "nearcentral/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace nearcentral {

namespace {

void check_degree(int n) {
    if (n < 0 || n > Permutation::kMaxDegree) {
        throw DomainError("permutation degree must be in [0, " + std::to_string(Permutation::kMaxDegree) + "]");
    }
}

std::vector<int> parse_ints(std::string_view text) {
    std::vector<int> out;
    int cur = 0;
    bool in_number = false;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur = cur * 10 + (ch - '0');
            in_number = true;
        } else {
            if (in_number) out.push_back(cur);
            cur = 0;
            in_number = false;
            if (ch != ',' && ch != ' ') throw DomainError("unexpected character in permutation: '" + std::string(1, ch) + "'");
        }
    }
    if (in_number) out.push_back(cur);
    return out;
}

}  // namespace

Permutation::Permutation(int n) {
    check_degree(n);
    n_ = static_cast<std::uint8_t>(n);
    for (int k = 0; k < kMaxDegree; ++k) img_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
}

Permutation Permutation::from_one_line(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    Permutation p(n);
    std::vector<bool> seen(images.size(), false);
    for (int k = 0; k < n; ++k) {
        int v = images[static_cast<std::size_t>(k)];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) throw DomainError("one-line form is not a bijection of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
        p.img_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k];
            int b = cyc[(k + 1) % cyc.size()];
            if (a < 1 || a > n || used[static_cast<std::size_t>(a - 1)]) throw DomainError("cycles must be disjoint within 1..n");
            used[static_cast<std::size_t>(a - 1)] = true;
            p.img_[static_cast<std::size_t>(a - 1)] = static_cast<std::uint8_t>(b - 1);
        }
    }
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a == b) throw DomainError("transposition needs two distinct symbols");
    return from_cycles(n, {{a, b}});
}

Permutation Permutation::parse(std::string_view text, int n) {
    if (text.find('(') == std::string_view::npos) {
        auto images = parse_ints(text);
        if (n > 0 && static_cast<int>(images.size()) != n) throw DomainError("one-line form has wrong length");
        return from_one_line(images);
    }
    if (n <= 0) throw DomainError("cycle notation needs the degree n");
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string_view::npos) {
        auto close = text.find(')', pos);
        if (close == std::string_view::npos) throw DomainError("unbalanced parenthesis in permutation");
        cycles.push_back(parse_ints(text.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
    }
    return from_cycles(n, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (n_ != rhs.n_) throw DomainError("cannot multiply permutations of different degree");
    Permutation out(n_);
    for (int k = 0; k < n_; ++k) out.img_[static_cast<std::size_t>(k)] = img_[rhs.img_[static_cast<std::size_t>(k)]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out(n_);
    for (int k = 0; k < n_; ++k) out.img_[img_[static_cast<std::size_t>(k)]] = static_cast<std::uint8_t>(k);
    return out;
}

Permutation Permutation::embed(int n) const {
    if (n < n_) throw DomainError("cannot embed into a smaller symmetric group");
    Permutation out(n);
    std::copy(img_.begin(), img_.begin() + n_, out.img_.begin());
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::array<bool, kMaxDegree> seen{};
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int len = 0;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

int Permutation::cycle_length_containing(int x) const {
    int len = 1;
    for (int y = img_[static_cast<std::size_t>(x - 1)]; y != x - 1; y = img_[static_cast<std::size_t>(y)]) ++len;
    return len;
}

MarkedPartition Permutation::marked_type() const {
    if (n_ == 0) throw DomainError("marked type of the empty permutation");
    return MarkedPartition(cycle_type(), cycle_length_containing(n_));
}

int Permutation::sign() const { return sign_power(n_ - cycle_type().length()); }

std::vector<int> Permutation::one_line() const {
    std::vector<int> out;
    for (int k = 0; k < n_; ++k) out.push_back(img_[static_cast<std::size_t>(k)] + 1);
    return out;
}

std::string Permutation::to_cycle_string() const {
    std::string s;
    std::array<bool, kMaxDegree> seen{};
    for (int start = 0; start < n_; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        s += '(';
        int x = start;
        bool first = true;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            if (!first) s += ' ';
            s += std::to_string(x + 1);
            first = false;
            x = img_[static_cast<std::size_t>(x)];
        } while (x != start);
        s += ')';
    }
    return s;
}

std::uint64_t Permutation::rank() const {
    std::uint64_t r = 0;
    for (int k = 0; k < n_; ++k) {
        int smaller = 0;
        for (int j = k + 1; j < n_; ++j) smaller += img_[static_cast<std::size_t>(j)] < img_[static_cast<std::size_t>(k)];
        r = r * static_cast<std::uint64_t>(n_ - k) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
    Permutation p(n);
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        std::uint64_t base = static_cast<std::uint64_t>(n - k);
        digits[static_cast<std::size_t>(k)] = rank % base;
        rank /= base;
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int k = 0; k < n; ++k) {
        auto idx = static_cast<long>(digits[static_cast<std::size_t>(k)]);
        p.img_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(pool[static_cast<std::size_t>(idx)]);
        pool.erase(pool.begin() + idx);
    }
    return p;
}

std::size_t Permutation::hash() const noexcept {
    std::size_t h = n_;
    for (int k = 0; k < n_; ++k) h = h * 31 + img_[static_cast<std::size_t>(k)];
    return h;
}

std::vector<Permutation> all_permutations(int n) {
    check_degree(n);
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

}  // namespace nearcentral
