#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hmt/errors.hpp"

namespace hmt {

// A permutation of {0, ..., n-1} stored as its image vector.
using Perm = std::vector<int>;

inline bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

inline Perm inverse_permutation(const Perm& p) {
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

// All n! permutations in lexicographic order.  Caller is responsible for
// keeping n small; n = 8 (40320 rows) is the intended ceiling.
inline std::vector<Perm> all_permutations(int n) {
    if (n < 1) throw ConfigError("permutation degree must be >= 1");
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace hmt
