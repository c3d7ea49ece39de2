#include "hmt/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include "hmt/errors.hpp"

namespace hmt::topo {

void Net::validate() const {
    if (!space) throw ConfigError("net refers to no space");
    if (separation <= 0) throw ConfigError("separation must be positive");
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const int c = centers[i];
        if (c < 0 || c >= space->size()) throw ConfigError("center index out of range");
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (space->distance(c, centers[j]) < separation)
                throw InternalError("net centers closer than the separation");
    }
    for (int p = 0; p < space->size(); ++p) {
        double best = std::numeric_limits<double>::infinity();
        for (int c : centers) best = std::min(best, space->distance(p, c));
        if (best >= separation) throw InternalError("net is not maximal");
    }
}

Net build_net(const FiniteMetricSpace& space, double s) {
    if (!std::isfinite(s) || s <= 0) throw ConfigError("separation must be positive");
    Net net;
    net.space = &space;
    net.separation = s;
    for (int p = 0; p < space.size(); ++p) {
        bool ok = true;
        for (int c : net.centers)
            if (space.distance(p, c) < s) {
                ok = false;
                break;
            }
        if (ok) net.centers.push_back(p);
    }
    return net;
}

namespace {

void check_nerve_args(const Net& net, double radius, int max_dim) {
    if (!net.space) throw ConfigError("net refers to no space");
    if (!std::isfinite(radius) || radius <= 0) throw ConfigError("radius must be positive");
    if (max_dim < 1) throw ConfigError("max_dim must be >= 1");
}

// Every subset of s (given sorted) with 2..max_card elements.
void for_each_subset(const std::vector<int>& s, int max_card,
                     const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() >= 2) emit(cur);
        if (std::ssize(cur) == max_card) return;
        for (std::size_t i = start; i < s.size(); ++i) {
            cur.push_back(s[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

NerveResult cech_nerve(const Net& net, double radius, int max_dim) {
    check_nerve_args(net, radius, max_dim);
    const FiniteMetricSpace& sp = *net.space;
    const int n_centers = static_cast<int>(net.centers.size());

    // Witness sets: which centers' balls contain each ambient point.  Equal
    // sets generate identical simplices, so deduplicate before expanding.
    NerveResult out;
    std::set<std::vector<int>> witness_sets;
    std::vector<int> covering;
    for (int w = 0; w < sp.size(); ++w) {
        covering.clear();
        for (int ci = 0; ci < n_centers; ++ci)
            if (sp.distance(w, net.centers[ci]) <= radius) covering.push_back(ci);
        if (std::ssize(covering) >= max_dim + 2) out.dimension_cap_hit = true;
        if (covering.size() >= 2) witness_sets.insert(covering);
    }

    std::set<std::vector<int>> simplices;
    for (const auto& s : witness_sets)
        for_each_subset(s, max_dim + 1, [&](const std::vector<int>& sub) { simplices.insert(sub); });

    out.complex = SimplicialComplex(n_centers);
    for (const auto& s : simplices) out.complex.insert(s);
    out.complex.finish();
    return out;
}

NerveResult rips_nerve(const Net& net, double radius, int max_dim) {
    check_nerve_args(net, radius, max_dim);
    const FiniteMetricSpace& sp = *net.space;
    const int n = static_cast<int>(net.centers.size());

    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sp.distance(net.centers[i], net.centers[j]) <= 2.0 * radius)
                adj[static_cast<std::size_t>(i) * n + j] = adj[static_cast<std::size_t>(j) * n + i] = 1;

    // Depth-first clique expansion in vertex order; every clique of size
    // 2..max_dim+1 becomes a simplex.
    NerveResult out;
    out.complex = SimplicialComplex(n);
    std::vector<int> clique;
    std::function<void(const std::vector<int>&)> grow = [&](const std::vector<int>& cands) {
        if (std::ssize(clique) == max_dim + 1) {
            if (!cands.empty()) out.dimension_cap_hit = true;
            return;
        }
        for (std::size_t k = 0; k < cands.size(); ++k) {
            const int v = cands[k];
            clique.push_back(v);
            if (clique.size() >= 2) out.complex.insert(clique);
            std::vector<int> next;
            for (std::size_t m = k + 1; m < cands.size(); ++m)
                if (adj[static_cast<std::size_t>(v) * n + cands[m]]) next.push_back(cands[m]);
            grow(next);
            clique.pop_back();
        }
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    grow(all);
    out.complex.finish();
    return out;
}

PipelineResult nerve_pipeline(const FiniteMetricSpace& space, double s, double radius,
                              const PipelineOptions& opts) {
    space.validate();
    PipelineResult r;
    r.net = build_net(space, s);
    r.report.radius_below_recommended = radius < 0.5 * s;
    r.nerve = cech_nerve(r.net, radius, opts.max_dim);
    r.profile = homology(r.nerve.complex, opts.n_threads);

    r.report.n_centers = static_cast<int>(r.net.centers.size());
    r.report.dimension_cap_hit = r.nerve.dimension_cap_hit;
    r.report.max_degree = r.nerve.complex.max_vertex_degree();

    bool covered = true;
    for (int p = 0; p < space.size() && covered; ++p) {
        bool near = false;
        for (int c : r.net.centers)
            if (space.distance(p, c) <= radius) {
                near = true;
                break;
            }
        covered = near;
    }
    r.report.cover_verified = covered;

    // Reference bounds at the s = r/4 preset: only meaningful for models
    // with a tagged geometry.
    const int dim = space.model_dimension();
    const double vol = space.model_volume();
    if (dim >= 2 && std::isfinite(vol)) {
        r.report.net_size_bound_ref = geom::net_size_bound(dim, vol, 4.0 * s);
        r.report.degree_bound_ref = geom::degree_bound(dim, 4.0 * s);
    } else {
        r.report.net_size_bound_ref = std::numeric_limits<double>::quiet_NaN();
        r.report.degree_bound_ref = std::numeric_limits<double>::quiet_NaN();
    }

    if (!opts.table.empty()) {
        double c = 0.0;
        for (const auto& e : opts.table)
            if (e.p == 1) c = std::max(c, e.c);
        if (c > 0) {
            r.report.gabber_checked = true;
            r.report.gabber_c = c;
            r.report.log_torsion_p1 = r.profile.log_torsion(1);
            r.report.gabber_bound_ok =
                r.report.log_torsion_p1 <= c * r.report.n_centers + 1e-12;
        }
    }
    return r;
}

}  // namespace hmt::topo
