#include "hmt/metric_space.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "hmt/errors.hpp"
#include "hmt/rng.hpp"

namespace hmt::topo {

FiniteMetricSpace FiniteMetricSpace::flat_torus(int dims, int resolution) {
    if (dims < 1 || dims > 3) throw ConfigError("flat torus supports 1 to 3 dimensions");
    if (resolution < 2) throw ConfigError("resolution must be >= 2");
    long long total = 1;
    for (int k = 0; k < dims; ++k) total *= resolution;
    if (total > 200000) throw ConfigError("flat torus grid too large (limit 200000 points)");

    FiniteMetricSpace s(static_cast<int>(total), "flat-torus");
    s.dims_ = dims;
    // Point p has grid coordinates (p % R, p/R % R, ...); distances wrap on
    // the unit cube.
    const double h = 1.0 / resolution;
    for (int i = 0; i < s.n_; ++i) {
        for (int j = i + 1; j < s.n_; ++j) {
            long long a = i, b = j;
            double sq = 0.0;
            for (int k = 0; k < dims; ++k) {
                const double delta = std::abs(static_cast<double>(a % resolution) - static_cast<double>(b % resolution)) * h;
                const double wrapped = std::min(delta, 1.0 - delta);
                sq += wrapped * wrapped;
                a /= resolution;
                b /= resolution;
            }
            s.at(i, j) = s.at(j, i) = std::sqrt(sq);
        }
    }
    return s;
}

namespace {

// Unit-sphere sample points along a Fibonacci spiral: nearly uniform and
// fully deterministic.
std::vector<std::array<double, 3>> fibonacci_sphere(int n) {
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<std::array<double, 3>> pts(n);
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        pts[i] = {rho * std::cos(phi), rho * std::sin(phi), z};
    }
    return pts;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double clamped_acos(double c) { return std::acos(std::min(1.0, std::max(-1.0, c))); }

}  // namespace

FiniteMetricSpace FiniteMetricSpace::round_sphere(int n_points) {
    if (n_points < 4) throw ConfigError("sphere model needs at least 4 points");
    FiniteMetricSpace s(n_points, "round-sphere");
    const auto pts = fibonacci_sphere(n_points);
    for (int i = 0; i < n_points; ++i)
        for (int j = i + 1; j < n_points; ++j)
            s.at(i, j) = s.at(j, i) = clamped_acos(dot3(pts[i], pts[j]));
    return s;
}

FiniteMetricSpace FiniteMetricSpace::projective_plane(int n_points) {
    if (n_points < 4) throw ConfigError("projective model needs at least 4 points");
    FiniteMetricSpace s(n_points, "projective-plane");
    const auto pts = fibonacci_sphere(n_points);
    // Antipodal quotient: both geodesics x -> y and x -> -y compete.
    for (int i = 0; i < n_points; ++i)
        for (int j = i + 1; j < n_points; ++j)
            s.at(i, j) = s.at(j, i) = clamped_acos(std::abs(dot3(pts[i], pts[j])));
    return s;
}

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<double>>& d) {
    const int n = static_cast<int>(d.size());
    if (n < 1) throw ConfigError("distance matrix must be nonempty");
    FiniteMetricSpace s(n, "explicit-matrix");
    for (int i = 0; i < n; ++i) {
        if (std::ssize(d[i]) != n) throw ConfigError("distance matrix must be square");
        for (int j = 0; j < n; ++j) {
            const double v = d[i][j];
            if (!std::isfinite(v) || v < 0) throw ConfigError("distances must be finite and >= 0");
            s.at(i, j) = v;
        }
    }
    s.validate();
    return s;
}

double FiniteMetricSpace::model_volume() const {
    if (model_ == "flat-torus") return 1.0;
    if (model_ == "round-sphere") return 4.0 * M_PI;
    if (model_ == "projective-plane") return 2.0 * M_PI;
    return std::numeric_limits<double>::quiet_NaN();
}

int FiniteMetricSpace::model_dimension() const {
    if (model_ == "flat-torus") return dims_;
    if (model_ == "round-sphere" || model_ == "projective-plane") return 2;
    return 0;
}

void FiniteMetricSpace::validate(std::uint64_t seed, int triples) const {
    for (int i = 0; i < n_; ++i) {
        if (distance(i, i) != 0.0) throw ConfigError("distance diagonal must be exactly zero");
        for (int j = i + 1; j < n_; ++j)
            if (distance(i, j) != distance(j, i)) throw ConfigError("distance matrix must be symmetric");
    }
    if (n_ < 3) return;
    // Spot-check the triangle inequality; rounded models get a tiny slack.
    Rng rng(seed);
    for (int t = 0; t < triples; ++t) {
        const int a = static_cast<int>(rng.bounded(n_));
        const int b = static_cast<int>(rng.bounded(n_));
        const int c = static_cast<int>(rng.bounded(n_));
        if (distance(a, c) > distance(a, b) + distance(b, c) + 1e-9)
            throw ConfigError("triangle inequality violated");
    }
}

}  // namespace hmt::topo
