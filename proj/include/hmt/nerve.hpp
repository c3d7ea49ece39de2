#pragma once

#include <vector>

#include "hmt/homology.hpp"
#include "hmt/hyperbolic.hpp"
#include "hmt/metric_space.hpp"
#include "hmt/simplicial.hpp"

namespace hmt::topo {

// Maximal s-separated subset of a finite metric space.
struct Net {
    const FiniteMetricSpace* space = nullptr;
    double separation = 0.0;
    std::vector<int> centers;

    // Pairwise separation >= s and maximality (every point has a center
    // within s).
    void validate() const;
};

// Greedy pass in point-index order: accept a point iff it keeps the set
// s-separated.  The result is maximal by construction.
Net build_net(const FiniteMetricSpace& space, double s);

struct NerveResult {
    SimplicialComplex complex;
    // True when (max_dim+1)-tuples would qualify, so homology above degree
    // max_dim - 1 is untrusted.
    bool dimension_cap_hit = false;
};

// Witness-approximated Cech nerve of the radius-balls around the centers: a
// tuple of centers spans a simplex iff some ambient sample point lies within
// radius of all of them.  Conservative: sparse sampling can only lose
// simplices, never invent them.
NerveResult cech_nerve(const Net& net, double radius, int max_dim);

// Vietoris-Rips comparator: a tuple spans a simplex iff all pairwise center
// distances are <= 2 * radius.  Contains the Cech nerve at equal radius.
NerveResult rips_nerve(const Net& net, double radius, int max_dim);

struct PipelineReport {
    int n_centers = 0;
    bool radius_below_recommended = false;  // radius < s/2 breaks the cover preset
    bool cover_verified = false;            // every point within radius of a center
    bool dimension_cap_hit = false;
    int max_degree = 0;

    // Comparison values from the hyperbolic bounds at the reference preset
    // s = r/4, i.e. r = 4s (NaN when the model has no reference geometry).
    double net_size_bound_ref = 0.0;
    double degree_bound_ref = 0.0;

    // Torsion against the scanned constant (skipped without a table).
    bool gabber_checked = false;
    double gabber_c = 0.0;
    double log_torsion_p1 = 0.0;
    bool gabber_bound_ok = false;
};

struct PipelineOptions {
    int max_dim = 3;
    geom::GabberTable table;  // empty = skip the torsion comparison
    unsigned n_threads = 1;
};

struct PipelineResult {
    Net net;
    NerveResult nerve;
    HomologyProfile profile;
    PipelineReport report;
};

// build_net -> cech_nerve -> homology, plus the bound report.
PipelineResult nerve_pipeline(const FiniteMetricSpace& space, double s, double radius,
                              const PipelineOptions& opts = {});

}  // namespace hmt::topo
