#pragma once

#include <vector>

#include "hmt/bigint.hpp"

namespace hmt::subgroups {

// a_n = number of index-n subgroups of the rank-2 free group, together with
// t_n = a_n * (n-1)!, the number of pairs in S_n x S_n acting transitively.
struct SubgroupCountTable {
    int max_index = 0;
    std::vector<BigInt> counts;                  // counts[n] = a_n, 1-based
    std::vector<BigInt> transitive_pair_counts;  // t_n = a_n * (n-1)!
};

// Exact table for n = 1..max_index via the factorial recursion
//   a_n = n * n! - sum_{i=1}^{n-1} (n-i)! * a_i.
SubgroupCountTable count_subgroups(int max_index);

// Independent oracle: counts pairs (s, t) in S_n x S_n whose generated group
// is transitive, by direct search over S_n x S_n with pruning.  Exponential;
// refuses n beyond the ceiling.
BigInt count_transitive_pairs_bruteforce(int n, int ceiling = 8, unsigned n_threads = 1);

// Sign of a_{n1}/(n1 * n1!) - a_{n2}/(n2 * n2!), computed exactly.
int compare_ratios(const SubgroupCountTable& t, int n1, int n2);

// a_n / (n * n!) >= num/den, exactly.
bool ratio_at_least(const SubgroupCountTable& t, int n, long num, long den);

// 1 - a_n / (n * n!) <= num/den, exactly.
bool ratio_defect_at_most(const SubgroupCountTable& t, int n, long num, long den);

}  // namespace hmt::subgroups
