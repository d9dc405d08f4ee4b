#pragma once

#include <vector>

#include "nearcentral/partitions.hpp"

namespace nearcentral {

/// Irreducible character χ^λ evaluated on the class μ (Murnaghan–Nakayama).
/// Memoized in a process-wide table guarded by a mutex; safe to call concurrently.
Integer chi(const Partition& lambda, const Partition& mu);

/// χ^μ_{(n-1,1)} from its closed form: 1 on (n), (-1)^n on (1^n),
/// (-1)^k on (n-k-1,2,1^{k-1}), 0 otherwise.
Integer chi_near_hook(const Partition& mu);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes;          // reverse-lex, also the row order
    std::vector<std::vector<Integer>> values;  // values[row λ][column μ]
};

CharacterTable character_table(int n);

}  // namespace nearcentral
