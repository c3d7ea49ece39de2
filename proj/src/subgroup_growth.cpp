#include "hmt/subgroup_growth.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "hmt/errors.hpp"
#include "hmt/parallel.hpp"
#include "hmt/perm.hpp"

namespace hmt::subgroups {

SubgroupCountTable count_subgroups(int max_index) {
    if (max_index < 1) throw ConfigError("max_index must be >= 1");
    const auto fact = factorial_table(max_index);
    SubgroupCountTable t;
    t.max_index = max_index;
    t.counts.assign(max_index + 1, 0);
    t.transitive_pair_counts.assign(max_index + 1, 0);
    for (int n = 1; n <= max_index; ++n) {
        BigInt a = n * fact[n];
        for (int i = 1; i < n; ++i) a -= fact[n - i] * t.counts[i];
        if (a <= 0) throw InternalError("subgroup count recursion went nonpositive");
        t.counts[n] = a;
        t.transitive_pair_counts[n] = a * fact[n - 1];
    }
    return t;
}

namespace {

// Union-find over {0..n-1} with an undo stack; no path compression so that
// merges can be rewound exactly.
struct RewindableUnionFind {
    std::vector<int> parent, size;
    std::vector<std::pair<int, int>> undo;  // (absorbed root, absorbing root)
    int classes;

    explicit RewindableUnionFind(int n) : parent(n), size(n, 1), classes(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        --classes;
        undo.emplace_back(b, a);
    }
    void rewind(std::size_t mark) {
        while (undo.size() > mark) {
            auto [b, a] = undo.back();
            undo.pop_back();
            parent[b] = b;
            size[a] -= size[b];
            ++classes;
        }
    }
};

// Depth-first count of the ways to finish the second permutation when point
// images 0..depth-1 are already assigned.  Accepts early once the action is
// transitive (any of the (n-depth)! completions works) and prunes when the
// remaining assignments cannot merge all orbit classes.
std::uint64_t count_sb_completions(int n, int depth, RewindableUnionFind& uf,
                                   std::vector<bool>& used,
                                   const std::vector<std::uint64_t>& fact) {
    if (uf.classes == 1) return fact[n - depth];
    if (depth == n) return 0;
    if (uf.classes - 1 > n - depth) return 0;
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        const std::size_t mark = uf.undo.size();
        uf.unite(depth, v);
        total += count_sb_completions(n, depth + 1, uf, used, fact);
        uf.rewind(mark);
        used[v] = false;
    }
    return total;
}

}  // namespace

BigInt count_transitive_pairs_bruteforce(int n, int ceiling, unsigned n_threads) {
    if (n < 1) throw ConfigError("n must be >= 1");
    if (n > ceiling)
        throw ScaleError("transitive pair oracle limited to n <= " + std::to_string(ceiling));
    if (n == 1) return 1;

    const auto perms = all_permutations(n);
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;

    // One slot per first permutation; each inner count is at most n! and the
    // grand total at most (n!)^2, comfortably inside 64 bits for n <= 8.
    std::vector<std::uint64_t> partial(perms.size(), 0);
    parallel_for(perms.size(), n_threads, [&](std::size_t ia) {
        const Perm& sa = perms[ia];
        RewindableUnionFind uf(n);
        for (int v = 0; v < n; ++v) uf.unite(v, sa[v]);
        std::vector<bool> used(n, false);
        partial[ia] = count_sb_completions(n, 0, uf, used, fact);
    });

    BigInt total = 0;
    for (std::uint64_t c : partial) total += BigInt(static_cast<unsigned long>(c));
    return total;
}

namespace {

void check_index(const SubgroupCountTable& t, int n) {
    if (n < 1 || n > t.max_index) throw ConfigError("index outside count table range");
}

}  // namespace

int compare_ratios(const SubgroupCountTable& t, int n1, int n2) {
    check_index(t, n1);
    check_index(t, n2);
    const auto fact = factorial_table(std::max(n1, n2));
    // a_{n1}/(n1*n1!) against a_{n2}/(n2*n2!), cross-multiplied.
    const BigInt lhs = t.counts[n1] * (n2 * fact[n2]);
    const BigInt rhs = t.counts[n2] * (n1 * fact[n1]);
    return cmp(lhs, rhs);
}

bool ratio_at_least(const SubgroupCountTable& t, int n, long num, long den) {
    check_index(t, n);
    if (den <= 0) throw ConfigError("denominator must be positive");
    const auto fact = factorial_table(n);
    return t.counts[n] * den >= num * (n * fact[n]);
}

bool ratio_defect_at_most(const SubgroupCountTable& t, int n, long num, long den) {
    check_index(t, n);
    if (den <= 0) throw ConfigError("denominator must be positive");
    const auto fact = factorial_table(n);
    const BigInt q = n * fact[n];
    return (q - t.counts[n]) * den <= num * q;
}

}  // namespace hmt::subgroups
