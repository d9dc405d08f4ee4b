#include "nearcentral/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace nearcentral {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex memo_mutex;
std::map<Key, Integer> memo;

std::vector<int> beta_set(const std::vector<int>& lambda) {
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
    return beta;
}

std::vector<int> from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

// Strips a rim hook of length mu[first] from lambda in every possible way.
Integer murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t first) {
    if (first == mu.size()) return lambda.empty() ? 1 : 0;
    Key key{lambda, std::vector<int>(mu.begin() + static_cast<long>(first), mu.end())};
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const int k = mu[first];
    auto beta = beta_set(lambda);
    std::set<int> occupied(beta.begin(), beta.end());
    Integer total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        int b = beta[idx];
        if (b - k < 0 || occupied.count(b - k)) continue;
        long between = std::count_if(beta.begin(), beta.end(), [&](int x) { return x > b - k && x < b; });
        auto moved = beta;
        moved[idx] = b - k;
        Integer term = murnaghan_nakayama(from_beta(moved), mu, first + 1);
        total += (between % 2 == 0) ? term : Integer(-term);
    }
    std::lock_guard lock(memo_mutex);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer chi(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw DomainError("chi: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
    }
    return murnaghan_nakayama(lambda.parts(), mu.parts(), 0);
}

Integer chi_near_hook(const Partition& mu) {
    const int n = mu.size();
    if (n < 2) throw DomainError("chi_near_hook needs n >= 2");
    if (mu == Partition{n}) return 1;
    if (mu == Partition::repeated(1, n)) return sign_power(n);
    // (n-k-1, 2, 1^{k-1}), k >= 1
    if (mu.length() >= 2 && mu[1] == 2 && std::all_of(mu.parts().begin() + 2, mu.parts().end(), [](int x) { return x == 1; })) {
        int k = mu.length() - 1;
        return sign_power(k);
    }
    return 0;
}

CharacterTable character_table(int n) {
    CharacterTable t;
    t.n = n;
    t.classes = enumerate_partitions(n);
    for (const auto& lambda : t.classes) {
        std::vector<Integer> row;
        for (const auto& mu : t.classes) row.push_back(chi(lambda, mu));
        t.values.push_back(std::move(row));
    }
    return t;
}

}  // namespace nearcentral
