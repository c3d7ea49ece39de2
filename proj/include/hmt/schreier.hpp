#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hmt/perm.hpp"

#include "json.hpp"

namespace hmt::schreier {

// Schreier graph of an index-n subgroup of the rank-2 free group: vertices
// are cosets, and the two generators act as permutations.  Each vertex has
// the four labelled edges a, a^-1, b, b^-1 (loops and parallels allowed).
struct SchreierGraph {
    int n = 1;
    Perm sigma_a{0};  // image of each vertex under the first generator
    Perm sigma_b{0};  // image under the second generator
    int base = 0;     // vertex representing the trivial coset
};

// Throws ConfigError unless both maps are permutations of {0..n-1}, the base
// is in range, and the pair acts transitively.
void validate(const SchreierGraph& g);

bool is_transitive(const SchreierGraph& g);

// Uniform transitive pair via rejection sampling; deterministic in (n, seed).
// Throws InternalError if max_rejections consecutive draws are intransitive.
SchreierGraph sample_schreier(int n, std::uint64_t seed, int max_rejections = 1000);

// All index-n subgroups, one canonically-labelled Schreier graph each.
// Exponential in n; refuses n beyond the ceiling.
std::vector<SchreierGraph> enumerate_subgroups(int n, int ceiling = 7, unsigned n_threads = 1);

// Byte string characterizing the graph up to base-preserving relabelling:
// vertices are renumbered in breadth-first discovery order from the base,
// scanning edges as a, a^-1, b, b^-1, and the relabelled permutation images
// are serialized.  Two graphs get equal strings iff they are isomorphic as
// based labelled graphs, i.e. iff they come from the same subgroup.
std::string graph_canonical_form(const SchreierGraph& g);

// Diameter of the underlying (undirected) 4-regular multigraph.
int graph_diameter(const SchreierGraph& g, unsigned n_threads = 1);

// Smallest d with 2 * 3^d - 1 >= n: a lower bound for the diameter of any
// n-vertex Schreier graph, since balls grow by at most a factor of 3.
int min_diameter_for_vertices(int n);

// Whether 3^diam <= n^2, i.e. diam <= 2 log_3 n, decided in exact integers.
bool within_two_log3(int diam, int n);

struct DiameterStatistics {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<int> diameters;  // one entry per trial, in trial order

    int min() const;
    int max() const;
    double median() const;
    double frac_within_two_log3() const;
};

DiameterStatistics diameter_statistics(int n, int trials, std::uint64_t seed,
                                       unsigned n_threads = 1, int max_rejections = 1000);

// hist[d] = number of index-n subgroups whose Schreier graph has diameter d.
// Exact, via full enumeration; same ceiling as enumerate_subgroups.
std::vector<long long> exact_diameter_histogram(int n, int ceiling = 7, unsigned n_threads = 1);

nlohmann::json graph_to_json(const SchreierGraph& g);
SchreierGraph graph_from_json(const nlohmann::json& j);

}  // namespace hmt::schreier
