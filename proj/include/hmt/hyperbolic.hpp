#pragma once

#include <vector>

namespace hmt::geom {

// Surface area of the unit (n-1)-sphere, 2 * pi^(n/2) / Gamma(n/2).
double sphere_surface_area(int n);
double log_sphere_surface_area(int n);

// Volume of the radius-r ball in hyperbolic n-space,
//   vol(S^(n-1)) * integral_0^r sinh(t)^(n-1) dt,
// by adaptive quadrature.  Returns +inf when the value exceeds double range.
double ball_volume(int n, double r);

// Natural log of ball_volume; finite for every r > 0 and usable far outside
// double range on either end.  The log-radius variant accepts radii far
// below double underflow.
double log_ball_volume(int n, double r);
double log_ball_volume_from_log_radius(int n, double log_r);

// Inverse of r -> ball_volume(n, r) by bisection: the least diameter a
// closed hyperbolic n-manifold of volume v can have, up to the normalizing
// constant of the comparison.
double min_diameter_for_volume(int n, double v);
double min_diameter_for_log_volume(int n, double log_v);

// Injectivity radius floor exp(-diam / c) and its log twin.
double injectivity_floor(double diam, double c);
double log_injectivity_floor(double diam, double c);

// Betti number bound c * exp((n-1) * diam) and its log twin.
double betti_bound(int n, double diam, double c);
double log_betti_bound(int n, double diam, double c);

// Size bound vol / ball_volume(n, r/4) for a maximal r/4-separated net in a
// volume-v manifold, and its log twin.
double net_size_bound(int n, double vol, double r);
double log_net_size_bound(int n, double log_vol, double r);

// Degree bound ball_volume(9r/8) / ball_volume(r/8) for the nerve of the
// net's r/2-ball cover; tends to the plateau 9^n as r -> 0.
double degree_bound(int n, double r);
double log_degree_bound(int n, double r);
double log_degree_bound_from_log_radius(int n, double log_r);

struct GeometryParams {
    double c_inj = 1.0;    // injectivity comparison constant
    double c_vol = 1.0;    // diameter-volume comparison constant
    double c_betti = 1.0;  // Betti bound constant
};

// One row of empirical torsion constants: log|H_p tors| <= c * vertices for
// complexes of vertex degree at most degree.
struct GabberEntry {
    double degree = 0.0;
    int p = 0;
    double c = 0.0;
};
using GabberTable = std::vector<GabberEntry>;

// The full chain from a diameter budget to a torsion-size bound:
// injectivity floor, net size, nerve degree, table constant, and the final
// log log bound with its per-diameter envelope.
struct TorsionBound {
    double log_r = 0.0;         // log of the injectivity floor
    double log_net_size = 0.0;  // log bound on nerve vertices
    double degree = 0.0;        // nerve degree bound, clamped at the 9^n plateau
    double gabber_c = 0.0;      // table constant used
    double loglog_bound = 0.0;  // log(c * net_size) = bound on log log torsion
    double envelope = 0.0;      // loglog_bound / diam
};
TorsionBound torsion_bound(int n, double diam, const GeometryParams& params,
                           const GabberTable& table);

// Inverts the linear chain loglog >= diam/a - log(b): the diameter a
// manifold needs before its torsion reaches the target, and the envelope
// achieved there.
struct SharpnessParams {
    double a = 1.0;              // diam <= a * log(vol)
    double b = 6.0 * 3.14159265358979323846;  // vol <= b * log(tors)
    double lambda1_floor = 0.0;  // spectral-gap floor, recorded only
};
struct SharpnessResult {
    double envelope = 0.0;       // loglog_target / required_diam
    double asymptotic = 0.0;     // limit 1/a of the envelope
    double offset = 0.0;         // log(b)
    double required_diam = 0.0;  // a * (loglog_target + log(b))
};
SharpnessResult sharpness_chain(double loglog_target, const SharpnessParams& params);

}  // namespace hmt::geom
