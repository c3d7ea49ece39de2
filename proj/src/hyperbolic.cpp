#include "hmt/hyperbolic.hpp"

#include <cmath>
#include <limits>

#include "hmt/errors.hpp"

namespace hmt::geom {

namespace {

constexpr double kQuadRelTol = 1e-12;

// sinh(x)/x, stable through x = 0.
double sinhc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
    }
    return std::sinh(x) / x;
}

// log(sinh(x)/x) for x >= 0 without overflow.
double log_sinhc(double x) {
    if (x < 1e-4) {
        const double x2 = x * x;
        return std::log1p(x2 / 6.0 * (1.0 + x2 / 20.0));
    }
    if (x > 35.0) return x - M_LN2 - std::log(x) + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x) / x);
}

template <class F>
double adapt(const F& f, double a, double fa, double m, double fm, double b, double fb,
             double whole, double eps, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return adapt(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth - 1) +
           adapt(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth - 1);
}

// Adaptive Simpson quadrature with a relative error target.
template <class F>
double integrate(const F& f, double a, double b, double rel_tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double eps = rel_tol * std::max(std::abs(whole), 1e-300);
    return adapt(f, a, fa, m, fm, b, fb, whole, eps, 60);
}

void check_dimension(int n) {
    if (n < 2) throw ConfigError("dimension must be >= 2");
}

// Scaled form of the volume integral: with t = r*s,
//   integral_0^r sinh(t)^(n-1) dt = r^n * I,
//   I = integral_0^1 sinhc(r*s)^(n-1) * s^(n-1) ds,
// which stays in double range as long as (n-1) * log_sinhc(r) does.
double scaled_integral(int n, double r) {
    return integrate([n, r](double s) { return std::pow(sinhc(r * s), n - 1) * std::pow(s, n - 1); },
                     0.0, 1.0, kQuadRelTol);
}

// log of integral_0^r sinh(t)^(n-1) dt for large (n-1)*r: substituting
// t = r + u and pulling out the dominant factor e^((n-1)*r) / 2^(n-1) leaves
//   J = integral_{-L}^0 e^((n-1)u) * (1 - e^(-2(u+r)))^(n-1) du
// with all mass within L ~ 45/(n-1) of the right endpoint.
double log_tail_integral(int n, double r) {
    const double df = n - 1;
    const double tail = std::min(r, 45.0 / df + 5.0);
    const double j = integrate(
        [df, r](double u) {
            return std::exp(df * u) * std::pow(-std::expm1(-2.0 * (u + r)), df);
        },
        -tail, 0.0, kQuadRelTol);
    return df * r - df * M_LN2 + std::log(j);
}

}  // namespace

double log_sphere_surface_area(int n) {
    check_dimension(n);
    return M_LN2 + 0.5 * n * std::log(M_PI) - std::lgamma(0.5 * n);
}

double sphere_surface_area(int n) {
    check_dimension(n);
    return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

double ball_volume(int n, double r) {
    check_dimension(n);
    if (!std::isfinite(r) || r < 0) throw ConfigError("radius must be finite and >= 0");
    if (r == 0) return 0.0;
    // Direct evaluation while every factor is in range; the integrand peaks
    // at sinhc(r)^(n-1) and the result at vol(S) * r^n * that peak.
    const double log_peak = (n - 1) * log_sinhc(r);
    const double log_cap = log_sphere_surface_area(n) + n * std::log(r) + log_peak;
    if (log_peak < 690.0 && log_cap < 700.0)
        return sphere_surface_area(n) * std::pow(r, n) * scaled_integral(n, r);
    const double lv = log_ball_volume(n, r);
    return lv < 709.0 ? std::exp(lv) : std::numeric_limits<double>::infinity();
}

double log_ball_volume_from_log_radius(int n, double log_r) {
    check_dimension(n);
    if (std::isnan(log_r)) throw ConfigError("log radius must not be NaN");
    if (log_r == -std::numeric_limits<double>::infinity())
        return -std::numeric_limits<double>::infinity();
    const double r = std::exp(log_r);
    if (!std::isfinite(r)) return std::numeric_limits<double>::infinity();
    if ((n - 1) * log_sinhc(r) < 690.0)
        return log_sphere_surface_area(n) + n * log_r + std::log(scaled_integral(n, r));
    return log_sphere_surface_area(n) + log_tail_integral(n, r);
}

double log_ball_volume(int n, double r) {
    check_dimension(n);
    if (!std::isfinite(r) || r < 0) throw ConfigError("radius must be finite and >= 0");
    if (r == 0) return -std::numeric_limits<double>::infinity();
    return log_ball_volume_from_log_radius(n, std::log(r));
}

double min_diameter_for_log_volume(int n, double log_v) {
    check_dimension(n);
    if (std::isnan(log_v)) throw ConfigError("log volume must not be NaN");
    double lo = 0.0, hi = 1.0;
    while (log_ball_volume(n, hi) < log_v) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw ConfigError("volume out of invertible range");
    }
    // Bisection to well below 1e-10 relative width.
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (log_ball_volume(n, mid) < log_v ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double min_diameter_for_volume(int n, double v) {
    if (!std::isfinite(v) || v <= 0) throw ConfigError("volume must be finite and positive");
    return min_diameter_for_log_volume(n, std::log(v));
}

double injectivity_floor(double diam, double c) {
    return std::exp(log_injectivity_floor(diam, c));
}

double log_injectivity_floor(double diam, double c) {
    if (!std::isfinite(diam) || diam < 0) throw ConfigError("diameter must be finite and >= 0");
    if (!std::isfinite(c) || c <= 0) throw ConfigError("comparison constant must be positive");
    return -diam / c;
}

double betti_bound(int n, double diam, double c) {
    const double lb = log_betti_bound(n, diam, c);
    return lb < 709.0 ? std::exp(lb) : std::numeric_limits<double>::infinity();
}

double log_betti_bound(int n, double diam, double c) {
    check_dimension(n);
    if (!std::isfinite(diam) || diam < 0) throw ConfigError("diameter must be finite and >= 0");
    if (!std::isfinite(c) || c <= 0) throw ConfigError("Betti constant must be positive");
    return std::log(c) + (n - 1) * diam;
}

double net_size_bound(int n, double vol, double r) {
    if (!std::isfinite(vol) || vol <= 0) throw ConfigError("volume must be positive");
    if (!std::isfinite(r) || r <= 0) throw ConfigError("radius must be positive");
    return vol / ball_volume(n, 0.25 * r);
}

double log_net_size_bound(int n, double log_vol, double r) {
    if (std::isnan(log_vol)) throw ConfigError("log volume must not be NaN");
    if (!std::isfinite(r) || r <= 0) throw ConfigError("radius must be positive");
    return log_vol - log_ball_volume(n, 0.25 * r);
}

double log_degree_bound_from_log_radius(int n, double log_r) {
    // Packing bound for the number of r/2-balls meeting a given one: centers
    // lie in the 9r/8-ball and each owns a private r/8-ball.
    return log_ball_volume_from_log_radius(n, log_r + std::log(9.0 / 8.0)) -
           log_ball_volume_from_log_radius(n, log_r - std::log(8.0));
}

double log_degree_bound(int n, double r) {
    if (!std::isfinite(r) || r <= 0) throw ConfigError("radius must be positive");
    return log_degree_bound_from_log_radius(n, std::log(r));
}

double degree_bound(int n, double r) {
    return std::exp(log_degree_bound(n, r));
}

TorsionBound torsion_bound(int n, double diam, const GeometryParams& params,
                           const GabberTable& table) {
    check_dimension(n);
    if (!std::isfinite(diam) || diam <= 0) throw ConfigError("diameter must be positive");

    TorsionBound tb;
    tb.log_r = log_injectivity_floor(diam, params.c_inj);
    // Net vertices: manifold volume (capped by the diameter ball) divided by
    // the private r/4-ball of each center.
    const double log_vol_cap = log_ball_volume(n, diam);
    tb.log_net_size =
        log_vol_cap - log_ball_volume_from_log_radius(n, tb.log_r - std::log(4.0));
    const double raw_degree = std::exp(log_degree_bound_from_log_radius(n, tb.log_r));
    tb.degree = std::max(raw_degree, std::pow(9.0, n));

    double c = -1.0;
    for (const auto& e : table)
        if (e.degree >= tb.degree * (1.0 - 1e-12) && e.c > c) c = e.c;
    if (c <= 0)
        throw ConfigError("constant table missing an entry covering degree bound " +
                          std::to_string(tb.degree));
    tb.gabber_c = c;
    tb.loglog_bound = std::log(c) + tb.log_net_size;
    tb.envelope = tb.loglog_bound / diam;
    return tb;
}

SharpnessResult sharpness_chain(double loglog_target, const SharpnessParams& params) {
    if (!std::isfinite(loglog_target) || loglog_target <= 0)
        throw ConfigError("target must be positive");
    if (params.a <= 0 || params.b <= 0) throw ConfigError("chain constants must be positive");
    if (params.lambda1_floor < 0) throw ConfigError("spectral-gap floor must be >= 0");
    SharpnessResult out;
    out.offset = std::log(params.b);
    out.required_diam = params.a * (loglog_target + out.offset);
    if (out.required_diam <= 0) throw ConfigError("target does not clear the chain offset");
    out.envelope = loglog_target / out.required_diam;
    out.asymptotic = 1.0 / params.a;
    return out;
}

}  // namespace hmt::geom
