#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hmt::topo {

// Finite sample model of a metric space, stored as a dense symmetric
// distance matrix.  Model constructors tag the instance so the pipeline can
// pick suitable comparison geometry.
class FiniteMetricSpace {
public:
    // resolution^dims grid points with the quotient (wrap-around) metric on
    // the unit cube; dims in 1..3.
    static FiniteMetricSpace flat_torus(int dims, int resolution);

    // n_points spiral (Fibonacci) points on the unit sphere, geodesic metric.
    static FiniteMetricSpace round_sphere(int n_points);

    // Same samples with the antipodal quotient d(x,y) = min(d(x,y), d(x,-y)):
    // an exact metric model of the projective plane.
    static FiniteMetricSpace projective_plane(int n_points);

    static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& d);

    int size() const { return n_; }
    double distance(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::string& model() const { return model_; }

    // Reference area of the model surface (NaN when unknown), and the
    // dimension to use for comparison-geometry bounds (0 when unknown).
    double model_volume() const;
    int model_dimension() const;

    // Symmetry and zero diagonal exactly; triangle inequality on random
    // triples with a small slack for rounded models.
    void validate(std::uint64_t seed = 0, int triples = 500) const;

private:
    FiniteMetricSpace(int n, std::string model) : n_(n), model_(std::move(model)), d_(static_cast<std::size_t>(n) * n, 0.0) {}

    double& at(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }

    int n_;
    std::string model_;
    std::vector<double> d_;
    int dims_ = 0;  // flat-torus only
};

}  // namespace hmt::topo
