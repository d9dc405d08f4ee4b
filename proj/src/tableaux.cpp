#include "nearcentral/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace nearcentral {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    for (const auto& r : rows) {
        if (r.empty()) throw DomainError("tableau rows must be nonempty");
        lengths.push_back(static_cast<int>(r.size()));
    }
    if (!std::is_sorted(lengths.begin(), lengths.end(), std::greater<>())) {
        throw DomainError("tableau row lengths must be weakly decreasing");
    }
    return Partition(lengths);
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : shape_(shape_of(rows)), rows_(std::move(rows)) {
    const int n = shape_.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw DomainError("tableau must use 1..n once each");
            seen[static_cast<std::size_t>(v)] = true;
            if (c > 0 && rows_[r][c - 1] >= v) throw DomainError("tableau rows must increase");
            if (r > 0 && rows_[r - 1][c] >= v) throw DomainError("tableau columns must increase");
        }
    }
}

std::pair<int, int> StandardTableau::cell_of(int symbol) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = std::find(rows_[r].begin(), rows_[r].end(), symbol);
        if (it != rows_[r].end()) return {static_cast<int>(r), static_cast<int>(it - rows_[r].begin())};
    }
    throw DomainError("symbol not in tableau");
}

std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
    std::vector<StandardTableau> out;
    if (lambda.empty()) return out;
    std::vector<int> lengths = lambda.parts();
    std::vector<std::vector<int>> fill(lengths.size());
    for (std::size_t r = 0; r < lengths.size(); ++r) fill[r].assign(static_cast<std::size_t>(lengths[r]), 0);

    // `filled[r]` counts cells of row r still awaiting a symbol; symbols go in largest first.
    std::vector<int> filled = lengths;
    std::function<void(int)> place = [&](int symbol) {
        if (symbol == 0) {
            out.emplace_back(fill);
            return;
        }
        for (std::size_t r = 0; r < filled.size(); ++r) {
            if (filled[r] == 0) continue;
            bool corner = (r + 1 == filled.size()) || filled[r + 1] < filled[r];
            if (!corner) continue;
            --filled[r];
            fill[r][static_cast<std::size_t>(filled[r])] = symbol;
            place(symbol - 1);
            ++filled[r];
        }
    };
    place(lambda.size());
    return out;
}

std::vector<StandardTableau> enumerate_syt_marked(const Partition& lambda, int part) {
    if (!lambda.contains(part)) throw DomainError(std::to_string(part) + " is not a part of (" + lambda.to_string() + ")");
    std::vector<StandardTableau> out;
    for (auto& t : enumerate_syt(lambda)) {
        auto [r, c] = t.cell_of(lambda.size());
        if (lambda[static_cast<std::size_t>(r)] == part && c == part - 1) out.push_back(std::move(t));
    }
    return out;
}

Integer dimension(const Partition& lambda) {
    const auto& p = lambda.parts();
    Integer hooks = 1;
    for (std::size_t r = 0; r < p.size(); ++r) {
        for (int c = 0; c < p[r]; ++c) {
            int arm = p[r] - c - 1;
            int leg = 0;
            for (std::size_t below = r + 1; below < p.size() && p[below] > c; ++below) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(lambda.size()) / hooks;
}

std::vector<int> content_vector(const StandardTableau& t) {
    std::vector<int> out(static_cast<std::size_t>(t.size()));
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            out[static_cast<std::size_t>(t.rows()[r][c] - 1)] = static_cast<int>(c) - static_cast<int>(r);
        }
    }
    return out;
}

std::vector<int> contents(const Partition& lambda) {
    std::vector<int> out;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) out.push_back(c - r);
    }
    return out;
}

int marked_content(const Partition& lambda, int part) {
    if (!lambda.contains(part)) throw DomainError(std::to_string(part) + " is not a part of (" + lambda.to_string() + ")");
    int at_least = 0;
    for (int x : lambda.parts()) at_least += (x >= part);
    return part - at_least;
}

std::vector<Integer> content_polynomial(const Partition& lambda) {
    std::vector<Integer> poly{1};
    for (int c : contents(lambda)) {
        std::vector<Integer> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] += poly[k] * c;
        }
        poly = std::move(next);
    }
    return poly;
}

ContentSums content_sums(const Partition& lambda) {
    ContentSums s;
    for (int c : contents(lambda)) {
        s.sum += c;
        s.sum_squares += static_cast<long>(c) * c;
    }
    return s;
}

}  // namespace nearcentral
