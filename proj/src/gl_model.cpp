#include "hmt/gl_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hmt/errors.hpp"
#include "hmt/rng.hpp"
#include "hmt/subgroup_growth.hpp"

namespace hmt::gl {

double BlockTable::max_diameter() const {
    return std::max({v0, v1, a_plus, a_minus, b_plus, b_minus});
}

void BlockTable::validate() const {
    for (double d : {v0, v1, a_plus, a_minus, b_plus, b_minus})
        if (!std::isfinite(d) || d <= 0) throw ConfigError("block diameters must be finite and positive");
}

BlockTable BlockTable::from_json(const nlohmann::json& j) {
    BlockTable b;
    try {
        b.v0 = j.value("v0", 1.0);
        b.v1 = j.value("v1", 1.0);
        b.a_plus = j.value("a_plus", 1.0);
        b.a_minus = j.value("a_minus", 1.0);
        b.b_plus = j.value("b_plus", 1.0);
        b.b_minus = j.value("b_minus", 1.0);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed block table JSON: ") + e.what());
    }
    b.validate();
    return b;
}

nlohmann::json BlockTable::to_json() const {
    return nlohmann::json{{"v0", v0},           {"v1", v1},           {"a_plus", a_plus},
                          {"a_minus", a_minus}, {"b_plus", b_plus},   {"b_minus", b_minus}};
}

void GLDescriptor::validate() const {
    schreier::validate(graph);
    if (std::ssize(tau) != graph.n) throw ConfigError("marking length does not match vertex count");
    int ones = 0;
    for (auto v : tau) {
        if (v > 1) throw ConfigError("marking entries must be 0 or 1");
        ones += v;
    }
    if (ones != 1) throw ConfigError("marking must select exactly one vertex");
}

double manifold_diameter_upper(int graph_diameter, const BlockTable& blocks) {
    blocks.validate();
    if (graph_diameter < 0) throw ConfigError("graph diameter must be nonnegative");
    const double d = blocks.max_diameter();
    return 2.0 * d * graph_diameter + 2.0 * d;
}

double manifold_diameter_upper(const GLDescriptor& m, const BlockTable& blocks) {
    m.validate();
    return manifold_diameter_upper(schreier::graph_diameter(m.graph), blocks);
}

int max_graph_diameter_admitted(double d_max, const BlockTable& blocks) {
    blocks.validate();
    if (!std::isfinite(d_max) || d_max <= 0) throw ConfigError("d_max must be positive");
    // Largest integer g with 2*D*(g+1) <= d_max; small slack so that exact
    // boundary values land inside.
    const double g = d_max / (2.0 * blocks.max_diameter()) - 1.0;
    if (g < -1e-9) return -1;
    return static_cast<int>(std::floor(g + 1e-9));
}

FractionBound arithmetic_fraction_bound(double d, double c_n, double beta, double eps,
                                        double c_prime) {
    if (!std::isfinite(d) || d < 0) throw ConfigError("diameter must be nonnegative");
    if (c_n <= 0 || beta <= 0 || eps < 0 || c_prime <= 0)
        throw ConfigError("bound parameters must be positive (eps may be zero)");
    const double log_gain = beta * std::pow(d / c_n, 1.0 + eps);
    const double log_loss = c_prime * d * std::exp(c_prime * d);  // overflows to +inf harmlessly
    FractionBound out;
    out.log_bound = log_gain - log_loss;
    out.fraction = out.log_bound >= 0 ? 1.0 : std::exp(out.log_bound);
    return out;
}

NoncommCount count_noncommensurable(double d_max, const BlockTable& blocks, int n_ceiling,
                                    const CountOptions& opts) {
    blocks.validate();
    if (!std::isfinite(d_max) || d_max <= 0) throw ConfigError("d_max must be positive");
    if (n_ceiling < 1) throw ConfigError("index ceiling must be >= 1");
    // a_n must stay representable as a double for the sampled estimates.
    if (n_ceiling > 150) throw ConfigError("index ceiling above counting scale (150)");
    if (opts.exact_ceiling < 1 || opts.exact_ceiling > 7)
        throw ConfigError("exact enumeration ceiling must be in 1..7");
    if (opts.sample_trials < 1) throw ConfigError("sample_trials must be >= 1");

    const int g_max = max_graph_diameter_admitted(d_max, blocks);
    const auto table = subgroups::count_subgroups(n_ceiling);

    NoncommCount out;
    out.exact_total = 0;
    double variance_total = 0.0;
    // Indices 1 and 2 are always enumerated (the sampler needs n >= 3).
    const int exact_up_to = std::max(opts.exact_ceiling, 2);
    for (int n = 1; n <= n_ceiling; ++n) {
        NoncommPerIndex row;
        row.n = n;
        if (n <= exact_up_to) {
            row.exact = true;
            row.count = 0;
            if (g_max >= 0) {
                const auto hist = schreier::exact_diameter_histogram(n, exact_up_to, opts.n_threads);
                for (int d = 0; d < std::ssize(hist) && d <= g_max; ++d)
                    row.count += static_cast<long>(hist[d]);
            }
            row.fraction = mpz_get_d(row.count.get_mpz_t()) / mpz_get_d(table.counts[n].get_mpz_t());
            out.exact_total += row.count;
        } else {
            row.trials = opts.sample_trials;
            double p = 0.0;
            if (g_max >= 0) {
                const std::uint64_t n_seed = Rng::derive(opts.seed, n).next();
                const auto st =
                    schreier::diameter_statistics(n, opts.sample_trials, n_seed, opts.n_threads);
                long long hits = 0;
                for (int d : st.diameters) hits += d <= g_max;
                p = static_cast<double>(hits) / static_cast<double>(opts.sample_trials);
            }
            const double a_n = mpz_get_d(table.counts[n].get_mpz_t());
            row.fraction = p;
            row.estimate = a_n * p;
            row.stderr_est = a_n * std::sqrt(p * (1.0 - p) / opts.sample_trials);
            out.estimated_total += row.estimate;
            variance_total += row.stderr_est * row.stderr_est;
        }
        out.per_index.push_back(std::move(row));
    }
    out.stderr_total = std::sqrt(variance_total);
    // The next index contributes whenever its smallest possible graph
    // diameter is still admitted.
    out.ceiling_too_low =
        g_max >= 0 && schreier::min_diameter_for_vertices(n_ceiling + 1) <= g_max;
    return out;
}

}  // namespace hmt::gl
