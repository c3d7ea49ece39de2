#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "hmt/hyperbolic.hpp"
#include "hmt/rng.hpp"
#include "hmt/simplicial.hpp"

namespace hmt::topo {

// Random face-closed complex of dimension <= 3 with 1-skeleton max degree
// <= degree_cap and at most vertex_cap vertices.  The generator mixes three
// shapes: a bounded-degree graph filled with triangles near the cycle rank
// (where finite cyclic quotients concentrate), suspensions of small such
// complexes (shifting their degree-1 torsion up to degree 2), and a
// tetrahedra-rich variant.  Deterministic in the rng state.
SimplicialComplex random_bounded_degree_complex(int degree_cap, int vertex_cap, Rng& rng);

struct GabberScanParams {
    int degree_cap = 12;
    int vertex_cap = 40;
    long long trials = 10000;
    std::uint64_t seed = 0;
    unsigned n_threads = 1;
};

// One trial's contribution: vertex count and log torsion orders per degree.
struct GabberSample {
    int n_vertices = 0;
    double log_tors_p1 = 0.0;
    double log_tors_p2 = 0.0;

    double ratio(int p) const;  // log|H_p tors| / vertices
};

// The complex realizing the maximal ratio for one degree.
struct GabberWitness {
    int p = 0;
    long long trial = -1;  // -1: no torsion seen in this degree
    double ratio = 0.0;
    SimplicialComplex complex;
};

struct GabberScanResult {
    GabberScanParams params;
    std::vector<GabberSample> samples;  // one per trial, in trial order
    GabberWitness witness_p1;
    GabberWitness witness_p2;

    double c_estimate(int p) const;  // max ratio over trials, 0 if torsion-free

    // Constant table for the torsion bound: one entry per degree p in {1, 2},
    // each tagged with the scan's degree cap.
    geom::GabberTable table() const;
};

// Per-trial seeds are split from params.seed, so the sample list and the
// witnesses do not depend on thread count or completion order.
GabberScanResult gabber_scan(const GabberScanParams& params);

nlohmann::json gabber_table_to_json(const geom::GabberTable& table);
geom::GabberTable gabber_table_from_json(const nlohmann::json& j);

}  // namespace hmt::topo
