#include "hmt/gabber.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <vector>

#include "hmt/errors.hpp"
#include "hmt/homology.hpp"
#include "hmt/parallel.hpp"

namespace hmt::topo {

namespace {

// Bounded-degree graph on n <= 64 vertices: adjacency bitmasks plus the
// accepted edge list, with the component count for the cycle rank.
struct BoundedGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::array<int, 2>> edges;
    int components = 0;
};

BoundedGraph random_graph(int n, int degree_cap, Rng& rng) {
    BoundedGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    std::vector<std::array<int, 2>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    rng.shuffle(pairs);

    std::vector<int> deg(n, 0);
    for (const auto& [i, j] : pairs) {
        if (deg[i] >= degree_cap || deg[j] >= degree_cap) continue;
        g.adj[i] |= 1ULL << j;
        g.adj[j] |= 1ULL << i;
        ++deg[i];
        ++deg[j];
        g.edges.push_back({i, j});
    }

    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    g.components = n;
    for (const auto& [i, j] : g.edges) {
        const int a = find(i), b = find(j);
        if (a != b) {
            root[a] = b;
            --g.components;
        }
    }
    return g;
}

// Triangles {i < j < k}, found once each via their two smallest vertices.
std::vector<std::array<int, 3>> triangles_of(const BoundedGraph& g) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [i, j] : g.edges) {
        const int a = std::min(i, j), b = std::max(i, j);
        std::uint64_t m = g.adj[a] & g.adj[b] & ~((2ULL << b) - 1);
        while (m) {
            const int k = std::countr_zero(m);
            m &= m - 1;
            out.push_back({a, b, k});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Append another complex's simplices on a shifted vertex block.
void insert_shifted(SimplicialComplex& c, const SimplicialComplex& part, int offset) {
    for (int p = 1; p <= part.top_dimension(); ++p)
        for (auto s : part.simplices(p)) {
            for (int& v : s) v += offset;
            c.insert(std::move(s));
        }
}

// Graph edges plus a triangle count jittered around the cycle rank
// E - V + c, inserted into the builder on a shifted vertex block.
void near_critical_fill(SimplicialComplex& c, int offset, int n, int degree_cap, Rng& rng) {
    const BoundedGraph g = random_graph(n, degree_cap, rng);
    auto tris = triangles_of(g);
    rng.shuffle(tris);

    const long long rank = std::ssize(g.edges) - n + g.components;
    long long target = rank + static_cast<long long>(rng.bounded(21)) - 10;
    target = std::clamp(target, 0LL, static_cast<long long>(tris.size()));

    for (const auto& [i, j] : g.edges) c.insert({offset + i, offset + j});
    for (long long t = 0; t < target; ++t)
        c.insert({offset + tris[t][0], offset + tris[t][1], offset + tris[t][2]});
}

// Random graph with roughly as many triangles as independent cycles: the
// regime where the degree-1 homology is generically small and finite cyclic
// quotients have a chance to appear.
SimplicialComplex near_critical_complex(int degree_cap, int v_lo, int v_hi, Rng& rng) {
    const int n = v_lo + static_cast<int>(rng.bounded(v_hi - v_lo + 1));
    SimplicialComplex c(n);
    near_critical_fill(c, 0, n, degree_cap, rng);
    c.finish();
    return c;
}

// Minimal 6-vertex triangulation of the projective plane: the smallest
// identification pattern with torsion (H_1 = Z/2, all degrees 5).
SimplicialComplex projective_plane_6() {
    SimplicialComplex c(6);
    const int f[10][3] = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                          {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
    for (const auto& t : f) c.insert({t[0], t[1], t[2]});
    c.finish();
    return c;
}

// Mapping cone of the simplicial q-fold circle cover: an annulus winds the
// outer (qm)-cycle q times around the core m-cycle, and a coned disk fills
// the outer circle.  H_1 = Z/q; degrees are max(qm, 2q+2, 5).
SimplicialComplex moore_cone(int q, int m) {
    const int L = q * m;
    SimplicialComplex c(L + m + 1);
    const int apex = L + m;
    for (int i = 0; i < L; ++i) {
        const int x0 = i, x1 = (i + 1) % L;
        const int y0 = L + i % m, y1 = L + (i + 1) % m;
        c.insert({x0, x1, y0});
        c.insert({x1, y0, y1});
        c.insert({x0, x1, apex});
    }
    c.finish();
    return c;
}

// Identification gadgets with 1-skeleton degree <= degree_cap and at most
// budget vertices, smallest first.
std::vector<SimplicialComplex> moore_family(int degree_cap, int budget) {
    std::vector<SimplicialComplex> out;
    if (degree_cap >= 5 && budget >= 6) out.push_back(projective_plane_6());
    for (int q = 2; q <= 8; ++q)
        for (int m = 3; m <= 8; ++m)
            if (q * m <= degree_cap && 2 * q + 2 <= degree_cap && q * m + m + 1 <= budget)
                out.push_back(moore_cone(q, m));
    return out;
}

// Double cone over the base: apexes n and n+1, joined to every base simplex
// but not to each other.  Homology shifts up one degree, so torsion the base
// carries in degree 1 reappears in degree 2.
SimplicialComplex suspension_of(const SimplicialComplex& base) {
    const int n = base.n_vertices;
    SimplicialComplex c(n + 2);
    for (int v = 0; v < n; ++v) {
        c.insert({v, n});
        c.insert({v, n + 1});
    }
    for (int p = 1; p <= base.top_dimension(); ++p)
        for (const auto& s : base.simplices(p)) {
            c.insert(s);
            for (int apex : {n, n + 1}) {
                std::vector<int> cone = s;
                cone.push_back(apex);
                c.insert(std::move(cone));
            }
        }
    c.finish();
    return c;
}

// An identification gadget, optionally padded with a disjoint random block
// when the vertex budget allows.
SimplicialComplex moore_mode(int degree_cap, int vertex_cap, Rng& rng) {
    auto family = moore_family(degree_cap, vertex_cap);
    if (family.empty()) return near_critical_complex(degree_cap, 4, vertex_cap, rng);
    SimplicialComplex gadget = family[rng.bounded(family.size())];

    const int spare = vertex_cap - gadget.n_vertices;
    if (spare >= 12 && rng.bounded(2) == 0) {
        const int pad = 8 + static_cast<int>(rng.bounded(spare - 8 + 1));
        SimplicialComplex c(gadget.n_vertices + pad);
        insert_shifted(c, gadget, 0);
        near_critical_fill(c, gadget.n_vertices, pad, degree_cap, rng);
        c.finish();
        return c;
    }
    return gadget;
}

// Suspension of a small base, preferring a torsion gadget: its degree-1
// torsion comes back one degree up.  Base degrees grow by 2 and the apexes
// see every base vertex, hence the tightened caps.
SimplicialComplex suspension_mode(int degree_cap, int vertex_cap, Rng& rng) {
    const int base_budget = std::min(degree_cap, vertex_cap - 2);
    if (degree_cap >= 4 && rng.bounded(2) == 0) {
        auto family = moore_family(degree_cap - 2, base_budget);
        if (!family.empty()) return suspension_of(family[rng.bounded(family.size())]);
    }
    const int hi = std::min(base_budget, 12);
    if (degree_cap >= 4 && hi >= 4)
        return suspension_of(
            near_critical_complex(degree_cap - 2, std::max(4, hi / 2), hi, rng));
    return near_critical_complex(degree_cap, 4, vertex_cap, rng);
}

// Graph with a random batch of its 4-cliques filled solid, plus the usual
// near-critical triangle fill, to exercise the 3-skeleton.
SimplicialComplex tetra_complex(int degree_cap, int v_lo, int v_hi, Rng& rng) {
    const int n = v_lo + static_cast<int>(rng.bounded(v_hi - v_lo + 1));
    const BoundedGraph g = random_graph(n, degree_cap, rng);
    auto tris = triangles_of(g);

    std::vector<std::array<int, 4>> tets;
    for (const auto& [a, b, k] : tris) {
        std::uint64_t m = g.adj[a] & g.adj[b] & g.adj[k] & ~((2ULL << k) - 1);
        while (m) {
            const int l = std::countr_zero(m);
            m &= m - 1;
            tets.push_back({a, b, k, l});
        }
    }
    rng.shuffle(tets);
    const std::size_t keep = rng.bounded(tets.size() + 1);

    rng.shuffle(tris);
    const long long rank = std::ssize(g.edges) - n + g.components;
    long long target = rank + static_cast<long long>(rng.bounded(21)) - 10;
    target = std::clamp(target, 0LL, static_cast<long long>(tris.size()));

    SimplicialComplex c(n);
    for (const auto& [i, j] : g.edges) c.insert({i, j});
    for (long long t = 0; t < target; ++t) c.insert({tris[t][0], tris[t][1], tris[t][2]});
    for (std::size_t t = 0; t < keep; ++t)
        c.insert({tets[t][0], tets[t][1], tets[t][2], tets[t][3]});
    c.finish();
    return c;
}

}  // namespace

SimplicialComplex random_bounded_degree_complex(int degree_cap, int vertex_cap, Rng& rng) {
    if (degree_cap < 2) throw ConfigError("degree cap must be >= 2");
    if (vertex_cap < 4) throw ConfigError("vertex cap must be >= 4");
    if (vertex_cap > 64)
        throw ConfigError("generator holds adjacency in 64-bit masks (vertex cap <= 64)");

    const int lo = std::max(4, vertex_cap / 3);
    const std::uint64_t roll = rng.bounded(8);

    SimplicialComplex c;
    if (roll < 4) c = near_critical_complex(degree_cap, lo, vertex_cap, rng);
    else if (roll < 6) c = moore_mode(degree_cap, vertex_cap, rng);
    else if (roll < 7) c = suspension_mode(degree_cap, vertex_cap, rng);
    else c = tetra_complex(degree_cap, lo, vertex_cap, rng);

    if (c.n_vertices > vertex_cap) throw InternalError("generator exceeded the vertex cap");
    if (c.max_vertex_degree() > degree_cap) throw InternalError("generator exceeded the degree cap");
    return c;
}

double GabberSample::ratio(int p) const {
    if (p != 1 && p != 2) throw ConfigError("scan tracks torsion in degrees 1 and 2 only");
    return (p == 1 ? log_tors_p1 : log_tors_p2) / n_vertices;
}

double GabberScanResult::c_estimate(int p) const {
    double best = 0.0;
    for (const auto& s : samples) best = std::max(best, s.ratio(p));
    return best;
}

geom::GabberTable GabberScanResult::table() const {
    return {{static_cast<double>(params.degree_cap), 1, c_estimate(1)},
            {static_cast<double>(params.degree_cap), 2, c_estimate(2)}};
}

GabberScanResult gabber_scan(const GabberScanParams& params) {
    if (params.degree_cap < 2) throw ConfigError("degree cap must be >= 2");
    if (params.vertex_cap < 4) throw ConfigError("vertex cap must be >= 4");
    if (params.trials < 1) throw ConfigError("trials must be >= 1");

    GabberScanResult out;
    out.params = params;
    out.samples.resize(params.trials);
    parallel_for(params.trials, params.n_threads, [&](std::size_t t) {
        Rng rng = Rng::derive(params.seed, t);
        const SimplicialComplex c =
            random_bounded_degree_complex(params.degree_cap, params.vertex_cap, rng);
        const HomologyProfile h = homology(c);
        out.samples[t] = {c.n_vertices, h.log_torsion(1), h.log_torsion(2)};
    });

    for (GabberWitness* w : {&out.witness_p1, &out.witness_p2}) {
        w->p = (w == &out.witness_p1) ? 1 : 2;
        for (long long t = 0; t < std::ssize(out.samples); ++t) {
            const double r = out.samples[t].ratio(w->p);
            if (r > w->ratio) {
                w->ratio = r;
                w->trial = t;
            }
        }
        if (w->trial >= 0) {
            Rng rng = Rng::derive(params.seed, w->trial);
            w->complex = random_bounded_degree_complex(params.degree_cap, params.vertex_cap, rng);
        }
    }
    return out;
}

nlohmann::json gabber_table_to_json(const geom::GabberTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table)
        entries.push_back({{"degree", e.degree}, {"p", e.p}, {"c", e.c}});
    return {{"entries", entries}};
}

geom::GabberTable gabber_table_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw ConfigError("constant table must be an object with an \"entries\" array");
    geom::GabberTable table;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("degree") || !e.contains("p") || !e.contains("c") ||
            !e["degree"].is_number() || !e["p"].is_number_integer() || !e["c"].is_number())
            throw ConfigError("constant table entries need numeric degree, p, c");
        table.push_back({e["degree"].get<double>(), e["p"].get<int>(), e["c"].get<double>()});
    }
    return table;
}

}  // namespace hmt::topo
