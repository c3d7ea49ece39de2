#pragma once

#include <cstdint>
#include <vector>

#include "hmt/bigint.hpp"
#include "hmt/schreier.hpp"

#include "json.hpp"

namespace hmt::gl {

// Diameters of the six compact building blocks used by the graph-to-manifold
// construction: the two vertex blocks and the four labelled edge blocks.
struct BlockTable {
    double v0 = 1.0;
    double v1 = 1.0;
    double a_plus = 1.0;
    double a_minus = 1.0;
    double b_plus = 1.0;
    double b_minus = 1.0;

    double max_diameter() const;
    void validate() const;  // all six entries finite and positive

    static BlockTable from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// A manifold of the model: a Schreier graph plus a marking tau that singles
// out exactly one vertex.  Distinct subgroups give non-commensurable
// manifolds, so counting manifolds reduces to counting subgroups.
struct GLDescriptor {
    schreier::SchreierGraph graph;
    std::vector<std::uint8_t> tau;

    void validate() const;
};

// Upper bound 2 * D * diam(graph) + 2 * D with D the largest block diameter:
// any geodesic tracks a graph path, paying at most 2D per step and 2D at the
// marked ends.
double manifold_diameter_upper(int graph_diameter, const BlockTable& blocks);
double manifold_diameter_upper(const GLDescriptor& m, const BlockTable& blocks);

// Largest Schreier graph diameter g with 2*D*(g+1) <= d_max, or -1 if even
// g = 0 does not fit.
int max_graph_diameter_admitted(double d_max, const BlockTable& blocks);

// Upper bound min(1, exp(beta * (d/c_n)^(1+eps) - c_prime * d * e^(c_prime*d)))
// on the fraction of manifolds of diameter <= d that are arithmetic, carried
// in log space; the bound underflows any double for quite small d.
struct FractionBound {
    double log_bound = 0.0;
    double fraction = 1.0;
};
FractionBound arithmetic_fraction_bound(double d, double c_n = 1.0, double beta = 1.0,
                                        double eps = 0.1, double c_prime = 0.5);

struct NoncommPerIndex {
    int n = 0;
    bool exact = false;
    BigInt count;            // exact mode only
    double estimate = 0.0;   // sampled mode only
    double stderr_est = 0.0;
    double fraction = 0.0;   // fraction of index-n subgroups admitted
    int trials = 0;          // sampled mode only
};

struct NoncommCount {
    BigInt exact_total;
    double estimated_total = 0.0;
    double stderr_total = 0.0;
    bool ceiling_too_low = false;  // index n_ceiling + 1 could still contribute
    std::vector<NoncommPerIndex> per_index;
};

struct CountOptions {
    int exact_ceiling = 7;    // full enumeration up to here, sampling beyond
    int sample_trials = 200;
    std::uint64_t seed = 0;
    unsigned n_threads = 1;
};

// Number of pairwise non-commensurable manifolds of diameter <= d_max among
// all markings with index up to n_ceiling: exact by enumeration for small
// index, estimated by sampling above, with a flag when the ceiling truncates
// the count.
NoncommCount count_noncommensurable(double d_max, const BlockTable& blocks, int n_ceiling,
                                    const CountOptions& opts = {});

}  // namespace hmt::gl
