#include "hmt/schreier.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "hmt/errors.hpp"
#include "hmt/parallel.hpp"
#include "hmt/rng.hpp"

namespace hmt::schreier {

namespace {

// Flat adjacency table: neighbours of v are adj[4v..4v+3] in the fixed edge
// order a, a^-1, b, b^-1.
std::vector<int> adjacency(const SchreierGraph& g) {
    const Perm ia = inverse_permutation(g.sigma_a);
    const Perm ib = inverse_permutation(g.sigma_b);
    std::vector<int> adj(4 * g.n);
    for (int v = 0; v < g.n; ++v) {
        adj[4 * v + 0] = g.sigma_a[v];
        adj[4 * v + 1] = ia[v];
        adj[4 * v + 2] = g.sigma_b[v];
        adj[4 * v + 3] = ib[v];
    }
    return adj;
}

int count_reachable(const std::vector<int>& adj, int n, int start) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int found = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
            const int w = adj[4 * v + k];
            if (!seen[w]) {
                seen[w] = true;
                ++found;
                stack.push_back(w);
            }
        }
    }
    return found;
}

}  // namespace

bool is_transitive(const SchreierGraph& g) {
    return count_reachable(adjacency(g), g.n, g.base) == g.n;
}

void validate(const SchreierGraph& g) {
    if (g.n < 1) throw ConfigError("graph must have at least one vertex");
    if (std::ssize(g.sigma_a) != g.n || std::ssize(g.sigma_b) != g.n)
        throw ConfigError("permutation length does not match vertex count");
    if (!is_permutation(g.sigma_a) || !is_permutation(g.sigma_b))
        throw ConfigError("generator images are not permutations");
    if (g.base < 0 || g.base >= g.n) throw ConfigError("base vertex out of range");
    if (!is_transitive(g)) throw ConfigError("graph is not transitive");
}

SchreierGraph sample_schreier(int n, std::uint64_t seed, int max_rejections) {
    if (n < 1) throw ConfigError("n must be >= 1");
    if (max_rejections < 1) throw ConfigError("max_rejections must be >= 1");
    Rng rng(seed);
    Perm identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    for (int attempt = 0; attempt < max_rejections; ++attempt) {
        SchreierGraph g;
        g.n = n;
        g.sigma_a = identity;
        g.sigma_b = identity;
        rng.shuffle(g.sigma_a);
        rng.shuffle(g.sigma_b);
        g.base = 0;
        if (is_transitive(g)) return g;
    }
    // The transitive fraction tends to 1, so running dry means the sampler
    // itself is broken.
    throw InternalError("rejection cap exceeded");
}

namespace {

// Checks that breadth-first discovery from vertex 0 (edge order a, a^-1, b,
// b^-1) meets the vertices exactly in label order 0, 1, 2, ...  True iff the
// pair is the canonical representative of its subgroup, and implies
// transitivity.  n is assumed <= 64.
bool is_canonical_pair(int n, const int* sa, const int* ia, const int* sb, const int* ib) {
    std::uint64_t seen = 1;
    int next_id = 1;
    for (int v = 0; v < n; ++v) {
        if (v >= next_id) return false;  // v was never discovered
        const int nb[4] = {sa[v], ia[v], sb[v], ib[v]};
        for (int k = 0; k < 4; ++k) {
            const int w = nb[k];
            if (!(seen >> w & 1)) {
                if (w != next_id) return false;
                seen |= std::uint64_t(1) << w;
                ++next_id;
            }
        }
    }
    return next_id == n;
}

}  // namespace

std::vector<SchreierGraph> enumerate_subgroups(int n, int ceiling, unsigned n_threads) {
    if (n < 1) throw ConfigError("n must be >= 1");
    if (n > ceiling)
        throw ScaleError("enumeration scale exceeded (n <= " + std::to_string(ceiling) + ")");

    const auto perms = all_permutations(n);
    std::vector<Perm> inverses(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) inverses[i] = inverse_permutation(perms[i]);

    // A subgroup's canonical graph is the unique transitive pair whose BFS
    // discovery order agrees with the labels, so keeping exactly those pairs
    // enumerates subgroups without a dedup pass.
    std::vector<std::vector<SchreierGraph>> found(perms.size());
    parallel_for(perms.size(), n_threads, [&](std::size_t ia) {
        const int* sa = perms[ia].data();
        const int* sa_inv = inverses[ia].data();
        for (std::size_t ib = 0; ib < perms.size(); ++ib) {
            if (is_canonical_pair(n, sa, sa_inv, perms[ib].data(), inverses[ib].data())) {
                SchreierGraph g;
                g.n = n;
                g.sigma_a = perms[ia];
                g.sigma_b = perms[ib];
                g.base = 0;
                found[ia].push_back(std::move(g));
            }
        }
    });

    std::vector<SchreierGraph> out;
    for (auto& block : found)
        for (auto& g : block) out.push_back(std::move(g));
    return out;
}

std::string graph_canonical_form(const SchreierGraph& g) {
    validate(g);
    const Perm ia = inverse_permutation(g.sigma_a);
    const Perm ib = inverse_permutation(g.sigma_b);

    // Relabel vertices by BFS discovery order from the base.
    std::vector<int> new_id(g.n, -1);
    std::vector<int> order;
    order.reserve(g.n);
    new_id[g.base] = 0;
    order.push_back(g.base);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int v = order[head];
        const int nb[4] = {g.sigma_a[v], ia[v], g.sigma_b[v], ib[v]};
        for (int k = 0; k < 4; ++k) {
            const int w = nb[k];
            if (new_id[w] < 0) {
                new_id[w] = static_cast<int>(order.size());
                order.push_back(w);
            }
        }
    }
    if (std::ssize(order) != g.n) throw InternalError("validated graph failed BFS sweep");

    auto append_u32 = [](std::string& s, std::uint32_t x) {
        for (int k = 0; k < 4; ++k) s.push_back(static_cast<char>(x >> (8 * k) & 0xff));
    };
    std::string form;
    form.reserve(4 * (2 * g.n + 1));
    append_u32(form, static_cast<std::uint32_t>(g.n));
    for (int v = 0; v < g.n; ++v) append_u32(form, new_id[g.sigma_a[order[v]]]);
    for (int v = 0; v < g.n; ++v) append_u32(form, new_id[g.sigma_b[order[v]]]);
    return form;
}

namespace {

// Eccentricity of src by breadth-first search; dist is scratch of size n.
int eccentricity(const std::vector<int>& adj, int n, int src, std::vector<int>& dist,
                 std::vector<int>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[src] = 0;
    queue.push_back(src);
    int ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int k = 0; k < 4; ++k) {
            const int w = adj[4 * v + k];
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                ecc = std::max(ecc, dist[w]);
                queue.push_back(w);
            }
        }
    }
    if (std::ssize(queue) != n) throw InternalError("eccentricity scan on disconnected graph");
    return ecc;
}

}  // namespace

int graph_diameter(const SchreierGraph& g, unsigned n_threads) {
    validate(g);
    const auto adj = adjacency(g);
    const int n = g.n;

    // Chunked over sources so each task owns its scratch buffers.
    const std::size_t n_chunks = n_threads > 1 ? std::min<std::size_t>(4 * n_threads, n) : 1;
    const std::size_t chunk = (n + n_chunks - 1) / n_chunks;
    std::vector<int> chunk_max(n_chunks, 0);
    parallel_for(n_chunks, n_threads, [&](std::size_t c) {
        std::vector<int> dist(n), queue;
        queue.reserve(n);
        int best = 0;
        const std::size_t lo = c * chunk, hi = std::min<std::size_t>(lo + chunk, n);
        for (std::size_t src = lo; src < hi; ++src)
            best = std::max(best, eccentricity(adj, n, static_cast<int>(src), dist, queue));
        chunk_max[c] = best;
    });
    int diam = 0;
    for (int m : chunk_max) diam = std::max(diam, m);
    return diam;
}

int min_diameter_for_vertices(int n) {
    if (n < 1) throw ConfigError("n must be >= 1");
    // In a 4-regular graph every sphere grows by a factor of at most 3, so
    // |B(d)| <= 1 + 4 * (3^d - 1) / 2 = 2 * 3^d - 1.
    int d = 0;
    long long ball = 1;
    long long pow3 = 1;
    while (ball < n) {
        ++d;
        pow3 *= 3;
        ball = 2 * pow3 - 1;
    }
    return d;
}

bool within_two_log3(int diam, int n) {
    if (diam < 0 || n < 1) throw ConfigError("diameter and n must be nonnegative");
    // 3^diam <= n^2 in exact integer arithmetic.
    const auto n2 = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(n);
    unsigned __int128 p = 1;
    for (int i = 0; i < diam; ++i) {
        p *= 3;
        if (p > n2) return false;
    }
    return p <= n2;
}

int DiameterStatistics::min() const {
    if (diameters.empty()) throw ConfigError("no trials recorded");
    return *std::min_element(diameters.begin(), diameters.end());
}

int DiameterStatistics::max() const {
    if (diameters.empty()) throw ConfigError("no trials recorded");
    return *std::max_element(diameters.begin(), diameters.end());
}

double DiameterStatistics::median() const {
    if (diameters.empty()) throw ConfigError("no trials recorded");
    std::vector<int> s = diameters;
    std::sort(s.begin(), s.end());
    const std::size_t m = s.size() / 2;
    return s.size() % 2 ? s[m] : 0.5 * (s[m - 1] + s[m]);
}

double DiameterStatistics::frac_within_two_log3() const {
    if (diameters.empty()) throw ConfigError("no trials recorded");
    long long hits = 0;
    for (int d : diameters) hits += within_two_log3(d, n);
    return static_cast<double>(hits) / static_cast<double>(diameters.size());
}

DiameterStatistics diameter_statistics(int n, int trials, std::uint64_t seed,
                                       unsigned n_threads, int max_rejections) {
    if (n < 3) throw ConfigError("n must be >= 3");
    if (trials < 1) throw ConfigError("trials must be >= 1");
    DiameterStatistics st;
    st.n = n;
    st.trials = trials;
    st.seed = seed;
    st.diameters.assign(trials, 0);
    // One derived stream per trial, so the trial set is independent of both
    // thread count and execution order.
    parallel_for(trials, n_threads, [&](std::size_t t) {
        const std::uint64_t trial_seed = Rng::derive(seed, t).next();
        const SchreierGraph g = sample_schreier(n, trial_seed, max_rejections);
        st.diameters[t] = graph_diameter(g, 1);
    });
    return st;
}

std::vector<long long> exact_diameter_histogram(int n, int ceiling, unsigned n_threads) {
    const auto graphs = enumerate_subgroups(n, ceiling, n_threads);
    std::vector<int> diams(graphs.size());
    parallel_for(graphs.size(), n_threads, [&](std::size_t i) {
        diams[i] = graph_diameter(graphs[i], 1);
    });
    const int top = graphs.empty() ? 0 : *std::max_element(diams.begin(), diams.end());
    std::vector<long long> hist(top + 1, 0);
    for (int d : diams) ++hist[d];
    return hist;
}

nlohmann::json graph_to_json(const SchreierGraph& g) {
    return nlohmann::json{
        {"n", g.n}, {"sigma_a", g.sigma_a}, {"sigma_b", g.sigma_b}, {"base", g.base}};
}

SchreierGraph graph_from_json(const nlohmann::json& j) {
    SchreierGraph g;
    try {
        g.n = j.at("n").get<int>();
        g.sigma_a = j.at("sigma_a").get<Perm>();
        g.sigma_b = j.at("sigma_b").get<Perm>();
        g.base = j.value("base", 0);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed graph JSON: ") + e.what());
    }
    validate(g);
    return g;
}

}  // namespace hmt::schreier
