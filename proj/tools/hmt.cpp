// Command-line front end: every library module behind one binary, with
// deterministic seeding, CSV/JSON emission, and a manifest per artifact.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hmt/errors.hpp"
#include "hmt/gabber.hpp"
#include "hmt/gl_model.hpp"
#include "hmt/homology.hpp"
#include "hmt/hyperbolic.hpp"
#include "hmt/metric_space.hpp"
#include "hmt/nerve.hpp"
#include "hmt/rng.hpp"
#include "hmt/schreier.hpp"
#include "hmt/simplicial.hpp"
#include "hmt/subgroup_growth.hpp"

namespace {

using nlohmann::json;
using namespace hmt;

constexpr const char* kVersion = "1.0.0";

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in " + path + ": " + e.what());
    }
}

// Flags shared by every subcommand.  threads and out never influence the
// emitted data, only how it is produced and where it lands.
struct Global {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string format;  // empty = the subcommand's natural default
    std::string out;
};

// One run's artifact plumbing: the data file (or stdout), optional side
// files, and the manifest tying the artifact to its configuration.
struct Run {
    explicit Run(const Global& g) : out_path(g.out), seed(g.seed) {}

    std::string out_path;
    std::uint64_t seed = 0;
    std::string subcommand;
    json config;  // semantic parameters only: identical config => identical bytes
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void deliver(const std::string& data) const {
        if (out_path.empty()) {
            std::fwrite(data.data(), 1, data.size(), stdout);
            return;
        }
        write_file(out_path, data);
        const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        char hash[32];
        std::snprintf(hash, sizeof hash, "%016llx",
                      static_cast<unsigned long long>(fnv1a(subcommand + config.dump())));
        const json manifest = {{"config_hash", hash},
                               {"seed", seed},
                               {"version", kVersion},
                               {"wall_ms", wall.count()}};
        write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
    }

    // Secondary artifact (e.g. the diameter-statistics summary): a side file
    // next to the main one, or stderr when the main artifact goes to stdout.
    void deliver_extra(const std::string& suffix, const std::string& data) const {
        if (out_path.empty())
            std::fwrite(data.data(), 1, data.size(), stderr);
        else
            write_file(out_path + suffix, data);
    }

private:
    static void write_file(const std::string& path, const std::string& data) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ConfigError("cannot write file: " + path);
        f.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!f) throw ConfigError("failed writing file: " + path);
    }
};

std::string pick_format(const Global& g, const std::string& natural) {
    return g.format.empty() ? natural : g.format;
}

// ---------------------------------------------------------------- subgroups

void run_subgroups(const Global& g, int max_index, bool oracle, bool json_flag,
                   int oracle_ceiling) {
    Run run(g);
    run.subcommand = "subgroups";
    const std::string format = json_flag ? "json" : pick_format(g, "csv");
    run.config = {{"max_index", max_index},
                  {"oracle", oracle},
                  {"oracle_ceiling", oracle_ceiling},
                  {"format", format}};

    const auto table = subgroups::count_subgroups(max_index);
    const int oracle_up_to = oracle ? std::min(max_index, oracle_ceiling) : 0;
    std::vector<BigInt> oracle_pairs;
    for (int n = 1; n <= oracle_up_to; ++n) {
        oracle_pairs.push_back(
            subgroups::count_transitive_pairs_bruteforce(n, oracle_ceiling, g.threads));
        if (oracle_pairs.back() != table.transitive_pair_counts[n])
            throw InternalError("transitive pair oracle disagrees with the recursion at n = " +
                                std::to_string(n));
    }

    if (format == "json") {
        json a = json::array();
        for (int n = 1; n <= max_index; ++n) a.push_back(table.counts[n].get_str());
        if (!oracle) {
            run.deliver(a.dump(2) + "\n");
            return;
        }
        json pairs = json::array();
        for (const auto& p : oracle_pairs) pairs.push_back(p.get_str());
        run.deliver(json{{"a", a}, {"oracle_transitive_pairs", pairs}}.dump(2) + "\n");
        return;
    }

    std::string csv = oracle ? "n,a_n,oracle_pairs\n" : "n,a_n\n";
    for (int n = 1; n <= max_index; ++n) {
        csv += std::to_string(n) + "," + table.counts[n].get_str();
        if (oracle) {
            csv += ",";
            if (n <= oracle_up_to) csv += oracle_pairs[n - 1].get_str();
        }
        csv += "\n";
    }
    run.deliver(csv);
}

// ------------------------------------------------------------------ schreier

void run_schreier_sample(const Global& g, int n) {
    Run run(g);
    run.subcommand = "schreier sample";
    run.config = {{"n", n}, {"seed", g.seed}};
    const auto graph = schreier::sample_schreier(n, g.seed);
    run.deliver(schreier::graph_to_json(graph).dump(2) + "\n");
}

void run_schreier_enumerate(const Global& g, int n, bool emit_graphs) {
    Run run(g);
    run.subcommand = "schreier enumerate";
    run.config = {{"n", n}, {"emit_graphs", emit_graphs}};
    const auto graphs = schreier::enumerate_subgroups(n, 7, g.threads);
    json out = {{"n", n}, {"count", graphs.size()}};
    if (emit_graphs) {
        json arr = json::array();
        for (const auto& graph : graphs) arr.push_back(schreier::graph_to_json(graph));
        out["graphs"] = std::move(arr);
    }
    run.deliver(out.dump(2) + "\n");
}

json summary_json(const schreier::DiameterStatistics& st) {
    return {{"n", st.n},
            {"trials", st.trials},
            {"min", st.min()},
            {"median", st.median()},
            {"max", st.max()},
            {"frac_le_2log3", st.frac_within_two_log3()}};
}

void run_schreier_diam_stats(const Global& g, int n, int trials) {
    Run run(g);
    run.subcommand = "schreier diam-stats";
    const std::string format = pick_format(g, "csv");
    run.config = {{"n", n}, {"trials", trials}, {"seed", g.seed}, {"format", format}};

    const auto st = schreier::diameter_statistics(n, trials, g.seed, g.threads);
    if (format == "json") {
        json out = summary_json(st);
        out["diameters"] = st.diameters;
        run.deliver(out.dump(2) + "\n");
        return;
    }
    std::string csv = "trial,diameter\n";
    for (int t = 0; t < trials; ++t)
        csv += std::to_string(t) + "," + std::to_string(st.diameters[t]) + "\n";
    run.deliver(csv);
    run.deliver_extra(".summary.json", summary_json(st).dump(2) + "\n");
}

// ------------------------------------------------------------------------ gl

gl::BlockTable load_blocks(const std::string& path) {
    if (path.empty()) return {};
    return gl::BlockTable::from_json(parse_json_file(path));
}

void run_gl_count(const Global& g, double dmax, int ceiling, const std::string& block_path,
                  int exact_ceiling, int sample_trials) {
    Run run(g);
    run.subcommand = "gl count";
    const auto blocks = load_blocks(block_path);
    run.config = {{"dmax", dmax},          {"ceiling", ceiling},
                  {"blocks", blocks.to_json()}, {"exact_ceiling", exact_ceiling},
                  {"sample_trials", sample_trials}, {"seed", g.seed}};

    gl::CountOptions opts;
    opts.exact_ceiling = exact_ceiling;
    opts.sample_trials = sample_trials;
    opts.seed = g.seed;
    opts.n_threads = g.threads;
    const auto res = gl::count_noncommensurable(dmax, blocks, ceiling, opts);

    json per_n = json::array();
    for (const auto& row : res.per_index) {
        json r = {{"n", row.n}, {"exact", row.exact}, {"fraction", row.fraction}};
        if (row.exact) {
            r["count"] = row.count.get_str();
        } else {
            r["estimate"] = row.estimate;
            r["stderr"] = row.stderr_est;
            r["trials"] = row.trials;
        }
        per_n.push_back(std::move(r));
    }
    const json out = {{"dmax", dmax},
                      {"ceiling", ceiling},
                      {"exact", res.exact_total.get_str()},
                      {"estimated", res.estimated_total},
                      {"stderr", res.stderr_total},
                      {"ceiling_too_low", res.ceiling_too_low},
                      {"per_n", per_n}};
    run.deliver(out.dump(2) + "\n");
}

void run_gl_fraction(const Global& g, double d, double cn, double beta, double eps,
                     double cprime) {
    Run run(g);
    run.subcommand = "gl fraction";
    run.config = {{"d", d}, {"cn", cn}, {"beta", beta}, {"eps", eps}, {"cprime", cprime}};
    const auto fb = gl::arithmetic_fraction_bound(d, cn, beta, eps, cprime);
    run.deliver(json{{"d", d}, {"log_bound", fb.log_bound}, {"fraction", fb.fraction}}.dump(2) +
                "\n");
}

// ---------------------------------------------------------------------- geom

void run_geom_ball_volume(const Global& g, int n, double r, bool log_space) {
    Run run(g);
    run.subcommand = "geom ball-volume";
    run.config = {{"n", n}, {"r", r}, {"log_space", log_space}};
    const double log_volume = geom::log_ball_volume(n, r);
    json out = {{"n", n}, {"r", r}, {"log_volume", log_volume}};
    if (log_space) {
        out["volume"] = nullptr;  // authoritative answer is the log field
    } else {
        const double volume = geom::ball_volume(n, r);
        out["volume"] = std::isfinite(volume) ? json(volume) : json(nullptr);
    }
    run.deliver(out.dump(2) + "\n");
}

void run_geom_torsion_bound(const Global& g, int n, double diam, const std::string& table_path,
                            double c_inj, double c_vol, double c_betti) {
    Run run(g);
    run.subcommand = "geom torsion-bound";
    const auto table = topo::gabber_table_from_json(parse_json_file(table_path));
    run.config = {{"n", n},
                  {"diam", diam},
                  {"table", topo::gabber_table_to_json(table)},
                  {"c_inj", c_inj},
                  {"c_vol", c_vol},
                  {"c_betti", c_betti}};
    const auto tb = geom::torsion_bound(n, diam, {c_inj, c_vol, c_betti}, table);
    const json out = {{"n", n},
                      {"diam", diam},
                      {"log_r", tb.log_r},
                      {"log_net_size", tb.log_net_size},
                      {"degree", tb.degree},
                      {"gabber_c", tb.gabber_c},
                      {"loglog_bound", tb.loglog_bound},
                      {"envelope", tb.envelope}};
    run.deliver(out.dump(2) + "\n");
}

void run_geom_sharpness(const Global& g, double a, double b, double target,
                        double lambda1_floor) {
    Run run(g);
    run.subcommand = "geom sharpness";
    run.config = {{"a", a}, {"b", b}, {"target", target}, {"lambda1_floor", lambda1_floor}};
    geom::SharpnessParams params;
    params.a = a;
    params.b = b;
    params.lambda1_floor = lambda1_floor;
    const auto res = geom::sharpness_chain(target, params);
    const json out = {{"target", target},
                      {"required_diam", res.required_diam},
                      {"envelope", res.envelope},
                      {"asymptotic", res.asymptotic},
                      {"offset", res.offset}};
    run.deliver(out.dump(2) + "\n");
}

// ------------------------------------------------------------------ homology

void run_homology(const Global& g, const std::string& complex_path) {
    Run run(g);
    run.subcommand = "homology";
    const std::string raw = read_file(complex_path);
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(raw)));
    run.config = {{"complex_fnv", hash}};
    json parsed;
    try {
        parsed = json::parse(raw);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in " + complex_path + ": " + e.what());
    }
    const auto c = topo::complex_from_json(parsed);
    const auto profile = topo::homology(c, g.threads);
    run.deliver(topo::profile_to_json(profile).dump(2) + "\n");
}

// --------------------------------------------------------------------- nerve

topo::FiniteMetricSpace make_model(const std::string& model, int points, int dims,
                                   int resolution) {
    if (model == "flat-torus") {
        if (points >= 0)
            throw ConfigError("flat-torus is sized by --dims and --resolution, not --points");
        if (resolution < 0) throw ConfigError("flat-torus requires --resolution");
        return topo::FiniteMetricSpace::flat_torus(dims, resolution);
    }
    if (resolution >= 0 || dims != 2)
        throw ConfigError(model + " is sized by --points, not --dims/--resolution");
    if (points < 0) throw ConfigError(model + " requires --points");
    if (model == "round-sphere") return topo::FiniteMetricSpace::round_sphere(points);
    if (model == "projective-plane") return topo::FiniteMetricSpace::projective_plane(points);
    throw ConfigError("unknown model: " + model);
}

json report_json(const topo::PipelineResult& pr) {
    json report = {{"n_centers", pr.report.n_centers},
                   {"radius_below_recommended", pr.report.radius_below_recommended},
                   {"cover_verified", pr.report.cover_verified},
                   {"dimension_cap_hit", pr.report.dimension_cap_hit},
                   {"max_degree", pr.report.max_degree},
                   {"net_size_bound_ref", std::isfinite(pr.report.net_size_bound_ref)
                                              ? json(pr.report.net_size_bound_ref)
                                              : json(nullptr)},
                   {"degree_bound_ref", std::isfinite(pr.report.degree_bound_ref)
                                            ? json(pr.report.degree_bound_ref)
                                            : json(nullptr)}};
    if (pr.report.gabber_checked)
        report["gabber"] = {{"c", pr.report.gabber_c},
                            {"log_torsion_p1", pr.report.log_torsion_p1},
                            {"bound_ok", pr.report.gabber_bound_ok}};
    return report;
}

void run_nerve(const Global& g, const std::string& model, int points, int dims, int resolution,
               double sep, double radius, int max_dim, const std::string& table_path) {
    Run run(g);
    run.subcommand = "nerve";
    run.config = {{"model", model}, {"sep", sep}, {"radius", radius}, {"max_dim", max_dim}};
    if (points >= 0) run.config["points"] = points;
    if (resolution >= 0) {
        run.config["dims"] = dims;
        run.config["resolution"] = resolution;
    }

    const auto space = make_model(model, points, dims, resolution);
    topo::PipelineOptions opts;
    opts.max_dim = max_dim;
    opts.n_threads = g.threads;
    if (!table_path.empty()) {
        opts.table = topo::gabber_table_from_json(parse_json_file(table_path));
        run.config["table"] = topo::gabber_table_to_json(opts.table);
    }
    const auto pr = topo::nerve_pipeline(space, sep, radius, opts);

    const json out = {{"model", model},
                      {"n_points", space.size()},
                      {"sep", sep},
                      {"radius", radius},
                      {"max_dim", max_dim},
                      {"report", report_json(pr)},
                      {"homology", topo::profile_to_json(pr.profile)}};
    run.deliver(out.dump(2) + "\n");
}

// ---------------------------------------------------------------- gabber-scan

json witness_json(const topo::GabberWitness& w) {
    if (w.trial < 0) return nullptr;
    return {{"trial", w.trial}, {"ratio", w.ratio}, {"vertices", w.complex.n_vertices}};
}

void run_gabber_scan(const Global& g, int degree, int vmax, long long trials,
                     const std::string& table_out) {
    Run run(g);
    run.subcommand = "gabber-scan";
    run.config = {{"degree", degree}, {"vmax", vmax}, {"trials", trials}, {"seed", g.seed}};

    topo::GabberScanParams params;
    params.degree_cap = degree;
    params.vertex_cap = vmax;
    params.trials = trials;
    params.seed = g.seed;
    params.n_threads = g.threads;
    const auto scan = topo::gabber_scan(params);

    const json table = topo::gabber_table_to_json(scan.table());
    const json out = {{"degree", degree},
                      {"vmax", vmax},
                      {"trials", trials},
                      {"seed", g.seed},
                      {"c", {{"p1", scan.c_estimate(1)}, {"p2", scan.c_estimate(2)}}},
                      {"witness",
                       {{"p1", witness_json(scan.witness_p1)},
                        {"p2", witness_json(scan.witness_p2)}}},
                      {"table", table}};
    if (!table_out.empty()) {
        std::ofstream f(table_out, std::ios::binary);
        if (!f) throw ConfigError("cannot write file: " + table_out);
        f << table.dump(2) << "\n";
    }
    run.deliver(out.dump(2) + "\n");
}

// -------------------------------------------------------------------- curves

void run_curves_count_vs_diam(Run& run, const Global& g, int d_lo, int d_hi, int ceiling,
                              const std::string& block_path) {
    const auto blocks = load_blocks(block_path);
    run.config = {{"kind", "count-vs-diam"},
                  {"d_lo", d_lo},
                  {"d_hi", d_hi},
                  {"ceiling", ceiling},
                  {"blocks", blocks.to_json()}};
    if (d_lo > d_hi) throw ConfigError("d-lo must not exceed d-hi");

    std::vector<std::vector<long long>> hists;
    for (int n = 1; n <= ceiling; ++n)
        hists.push_back(schreier::exact_diameter_histogram(n, ceiling, g.threads));

    std::string csv = "d,count,log_count,loglog_count\n";
    for (int d = d_lo; d <= d_hi; ++d) {
        const int g_max = gl::max_graph_diameter_admitted(d, blocks);
        long long count = 0;
        for (const auto& hist : hists)
            for (int delta = 0; delta < std::ssize(hist) && delta <= g_max; ++delta)
                count += hist[delta];
        csv += std::to_string(d) + "," + std::to_string(count) + ",";
        if (count >= 1) {
            const double lc = std::log(static_cast<double>(count));
            csv += fmt_double(lc);
            csv += ",";
            if (lc > 0) csv += fmt_double(std::log(lc));
        } else {
            csv += ",";
        }
        csv += "\n";
    }
    run.deliver(csv);
}

void run_curves_diam_vs_n(Run& run, const Global& g, const std::vector<int>& ns, int trials) {
    run.config = {{"kind", "diam-vs-n"}, {"n", ns}, {"trials", trials}, {"seed", g.seed}};
    std::string csv = "n,trials,min,median,max,frac_le_2log3\n";
    for (int n : ns) {
        const std::uint64_t n_seed = Rng::derive(g.seed, static_cast<std::uint64_t>(n)).next();
        const auto st = schreier::diameter_statistics(n, trials, n_seed, g.threads);
        csv += std::to_string(n) + "," + std::to_string(trials) + "," +
               std::to_string(st.min()) + "," + fmt_double(st.median()) + "," +
               std::to_string(st.max()) + "," + fmt_double(st.frac_within_two_log3()) + "\n";
    }
    run.deliver(csv);
}

void run_curves_torsion_vs_vertices(Run& run, const Global& g, int degree, int vmax,
                                    long long trials) {
    run.config = {{"kind", "torsion-vs-vertices"},
                  {"degree", degree},
                  {"vmax", vmax},
                  {"trials", trials},
                  {"seed", g.seed}};
    topo::GabberScanParams params;
    params.degree_cap = degree;
    params.vertex_cap = vmax;
    params.trials = trials;
    params.seed = g.seed;
    params.n_threads = g.threads;
    const auto scan = topo::gabber_scan(params);

    std::string csv = "trial,vertices,log_tors_p1,log_tors_p2\n";
    for (long long t = 0; t < std::ssize(scan.samples); ++t) {
        const auto& s = scan.samples[t];
        csv += std::to_string(t) + "," + std::to_string(s.n_vertices) + "," +
               fmt_double(s.log_tors_p1) + "," + fmt_double(s.log_tors_p2) + "\n";
    }
    run.deliver(csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subgroup growth, Schreier graphs, hyperbolic bounds, and simplicial homology"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto global = std::make_shared<Global>();
    app.add_option("--seed", global->seed, "Base seed for every randomized computation");
    app.add_option("--threads", global->threads, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", global->format, "Output format where both make sense")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", global->out, "Write the artifact here (plus a .manifest.json)");

    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // subgroups
    {
        CLI::App* c = sub(&app, "subgroups", "Exact subgroup counts of the rank-2 free group");
        auto max_index = std::make_shared<int>(10);
        auto oracle = std::make_shared<bool>(false);
        auto json_flag = std::make_shared<bool>(false);
        auto oracle_ceiling = std::make_shared<int>(7);
        c->add_option("--max-index", *max_index, "Largest index to tabulate")->required();
        c->add_flag("--oracle", *oracle, "Cross-check against brute-force transitive pairs");
        c->add_flag("--json", *json_flag, "Emit a JSON array of decimal strings");
        c->add_option("--oracle-ceiling", *oracle_ceiling, "Largest index the oracle attempts");
        c->callback([=] {
            run_subgroups(*global, *max_index, *oracle, *json_flag, *oracle_ceiling);
        });
    }

    // schreier
    {
        CLI::App* c = sub(&app, "schreier", "Schreier graphs of finite-index subgroups");
        c->require_subcommand(1);
        {
            CLI::App* s = sub(c, "sample", "One uniform random Schreier graph");
            auto n = std::make_shared<int>(0);
            s->add_option("--n", *n, "Number of vertices (subgroup index)")->required();
            s->callback([=] { run_schreier_sample(*global, *n); });
        }
        {
            CLI::App* s = sub(c, "enumerate", "All subgroups of one index");
            auto n = std::make_shared<int>(0);
            auto emit = std::make_shared<bool>(false);
            s->add_option("--n", *n, "Subgroup index")->required();
            s->add_flag("--emit-graphs", *emit, "Include every graph in the output");
            s->callback([=] { run_schreier_enumerate(*global, *n, *emit); });
        }
        {
            CLI::App* s = sub(c, "diam-stats", "Diameter distribution over random graphs");
            auto n = std::make_shared<int>(0);
            auto trials = std::make_shared<int>(200);
            s->add_option("--n", *n, "Number of vertices")->required();
            s->add_option("--trials", *trials, "Number of sampled graphs");
            s->callback([=] { run_schreier_diam_stats(*global, *n, *trials); });
        }
    }

    // gl
    {
        CLI::App* c = sub(&app, "gl", "Graph-to-manifold diameter and counting model");
        c->require_subcommand(1);
        {
            CLI::App* s = sub(c, "count", "Non-commensurable manifolds within a diameter budget");
            auto dmax = std::make_shared<double>(0.0);
            auto ceiling = std::make_shared<int>(7);
            auto blocks = std::make_shared<std::string>();
            auto exact_ceiling = std::make_shared<int>(7);
            auto trials = std::make_shared<int>(200);
            s->add_option("--dmax", *dmax, "Manifold diameter budget")->required();
            s->add_option("--ceiling", *ceiling, "Largest subgroup index considered")->required();
            s->add_option("--block-table", *blocks, "JSON file of building-block diameters");
            s->add_option("--exact-ceiling", *exact_ceiling, "Full enumeration up to this index");
            s->add_option("--sample-trials", *trials, "Samples per index above the exact range");
            s->callback([=] {
                run_gl_count(*global, *dmax, *ceiling, *blocks, *exact_ceiling, *trials);
            });
        }
        {
            CLI::App* s = sub(c, "fraction", "Arithmetic-fraction upper bound");
            auto d = std::make_shared<double>(0.0);
            auto cn = std::make_shared<double>(1.0);
            auto beta = std::make_shared<double>(1.0);
            auto eps = std::make_shared<double>(0.1);
            auto cprime = std::make_shared<double>(0.5);
            s->add_option("--d", *d, "Diameter")->required();
            s->add_option("--cn", *cn, "Volume-comparison constant");
            s->add_option("--beta", *beta, "Arithmetic-count exponent constant");
            s->add_option("--eps", *eps, "Arithmetic-count exponent epsilon");
            s->add_option("--cprime", *cprime, "Total-count doubly exponential constant");
            s->callback([=] { run_gl_fraction(*global, *d, *cn, *beta, *eps, *cprime); });
        }
    }

    // geom
    {
        CLI::App* c = sub(&app, "geom", "Hyperbolic volume and torsion-bound formulas");
        c->require_subcommand(1);
        {
            CLI::App* s = sub(c, "ball-volume", "Hyperbolic ball volume");
            auto n = std::make_shared<int>(0);
            auto r = std::make_shared<double>(0.0);
            auto log_space = std::make_shared<bool>(false);
            s->add_option("--n", *n, "Dimension")->required();
            s->add_option("--r", *r, "Radius")->required();
            s->add_flag("--log-space", *log_space, "Report only the log-space value");
            s->callback([=] { run_geom_ball_volume(*global, *n, *r, *log_space); });
        }
        {
            CLI::App* s = sub(c, "torsion-bound", "Diameter-to-torsion bound chain");
            auto n = std::make_shared<int>(0);
            auto diam = std::make_shared<double>(0.0);
            auto table = std::make_shared<std::string>();
            auto c_inj = std::make_shared<double>(1.0);
            auto c_vol = std::make_shared<double>(1.0);
            auto c_betti = std::make_shared<double>(1.0);
            s->add_option("--n", *n, "Dimension")->required();
            s->add_option("--diam", *diam, "Manifold diameter")->required();
            s->add_option("--gabber-table", *table, "JSON table of scanned constants")
                ->required();
            s->add_option("--c-inj", *c_inj, "Injectivity comparison constant");
            s->add_option("--c-vol", *c_vol, "Volume comparison constant");
            s->add_option("--c-betti", *c_betti, "Betti bound constant");
            s->callback([=] {
                run_geom_torsion_bound(*global, *n, *diam, *table, *c_inj, *c_vol, *c_betti);
            });
        }
        {
            CLI::App* s = sub(c, "sharpness", "Linear envelope of the torsion bound");
            auto a = std::make_shared<double>(1.0);
            auto b = std::make_shared<double>(6.0 * 3.14159265358979323846);
            auto target = std::make_shared<double>(0.0);
            auto lambda1 = std::make_shared<double>(0.0);
            s->add_option("--a", *a, "Diameter-to-log-volume constant");
            s->add_option("--b", *b, "Volume-to-log-torsion constant");
            s->add_option("--target", *target, "Log log torsion target")->required();
            s->add_option("--lambda1-floor", *lambda1, "Spectral-gap floor (recorded)");
            s->callback([=] { run_geom_sharpness(*global, *a, *b, *target, *lambda1); });
        }
    }

    // homology
    {
        CLI::App* c = sub(&app, "homology", "Integral homology of a complex file");
        auto path = std::make_shared<std::string>();
        c->add_option("--complex", *path, "Complex JSON file")->required();
        c->callback([=] { run_homology(*global, *path); });
    }

    // nerve
    {
        CLI::App* c = sub(&app, "nerve", "Net, nerve, and homology of a metric model");
        auto model = std::make_shared<std::string>();
        auto points = std::make_shared<int>(-1);
        auto dims = std::make_shared<int>(2);
        auto resolution = std::make_shared<int>(-1);
        auto sep = std::make_shared<double>(0.0);
        auto radius = std::make_shared<double>(0.0);
        auto max_dim = std::make_shared<int>(3);
        auto table = std::make_shared<std::string>();
        c->add_option("--model", *model, "flat-torus, round-sphere, or projective-plane")
            ->required();
        c->add_option("--points", *points, "Sample count (sphere and projective plane)");
        c->add_option("--dims", *dims, "Torus dimension");
        c->add_option("--resolution", *resolution, "Torus grid resolution per axis");
        c->add_option("--sep", *sep, "Net separation")->required();
        c->add_option("--radius", *radius, "Cover ball radius")->required();
        c->add_option("--max-dim", *max_dim, "Largest nerve simplex dimension");
        c->add_option("--gabber-table", *table, "Check torsion against this constant table");
        c->callback([=] {
            run_nerve(*global, *model, *points, *dims, *resolution, *sep, *radius, *max_dim,
                      *table);
        });
    }

    // gabber-scan
    {
        CLI::App* c = sub(&app, "gabber-scan", "Empirical torsion constants of random complexes");
        auto degree = std::make_shared<int>(12);
        auto vmax = std::make_shared<int>(40);
        auto trials = std::make_shared<long long>(10000);
        auto table_out = std::make_shared<std::string>();
        c->add_option("--degree", *degree, "1-skeleton degree cap");
        c->add_option("--vmax", *vmax, "Vertex cap");
        c->add_option("--trials", *trials, "Number of random complexes");
        c->add_option("--table-out", *table_out, "Also write the constant table here");
        c->callback([=] { run_gabber_scan(*global, *degree, *vmax, *trials, *table_out); });
    }

    // curves
    {
        CLI::App* c = sub(&app, "curves", "Plot-ready data for the three headline curves");
        auto kind = std::make_shared<std::string>();
        auto d_lo = std::make_shared<int>(2);
        auto d_hi = std::make_shared<int>(12);
        auto ceiling = std::make_shared<int>(7);
        auto blocks = std::make_shared<std::string>();
        auto ns = std::make_shared<std::vector<int>>(std::vector<int>{27, 81, 243, 729});
        auto trials = std::make_shared<int>(-1);
        auto degree = std::make_shared<int>(12);
        auto vmax = std::make_shared<int>(40);
        c->add_option("--kind", *kind, "count-vs-diam, diam-vs-n, or torsion-vs-vertices")
            ->required()
            ->check(CLI::IsMember({"count-vs-diam", "diam-vs-n", "torsion-vs-vertices"}));
        c->add_option("--d-lo", *d_lo, "Smallest diameter budget (count-vs-diam)");
        c->add_option("--d-hi", *d_hi, "Largest diameter budget (count-vs-diam)");
        c->add_option("--ceiling", *ceiling, "Largest subgroup index (count-vs-diam)");
        c->add_option("--block-table", *blocks, "Building-block diameters (count-vs-diam)");
        c->add_option("--n", *ns, "Vertex counts (diam-vs-n)")->delimiter(',');
        c->add_option("--trials", *trials, "Trials per point (diam-vs-n, torsion-vs-vertices)");
        c->add_option("--degree", *degree, "Degree cap (torsion-vs-vertices)");
        c->add_option("--vmax", *vmax, "Vertex cap (torsion-vs-vertices)");
        c->callback([=] {
            Run run(*global);
            run.subcommand = "curves";
            if (*kind == "count-vs-diam")
                run_curves_count_vs_diam(run, *global, *d_lo, *d_hi, *ceiling, *blocks);
            else if (*kind == "diam-vs-n")
                run_curves_diam_vs_n(run, *global, *ns, *trials < 0 ? 200 : *trials);
            else
                run_curves_torsion_vs_vertices(run, *global, *degree, *vmax,
                                               *trials < 0 ? 10000 : *trials);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::fprintf(stderr, "%s\n",
                     json{{"error", {{"type", "config"}, {"message", e.what()}}}}.dump().c_str());
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "%s\n",
                     json{{"error", {{"type", "config"}, {"message", e.what()}}}}.dump().c_str());
        return 2;
    } catch (const ScaleError& e) {
        std::fprintf(stderr, "%s\n",
                     json{{"error", {{"type", "scale"}, {"message", e.what()}}}}.dump().c_str());
        return 3;
    } catch (const InternalError& e) {
        std::fprintf(stderr, "%s\n",
                     json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump().c_str());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n",
                     json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump().c_str());
        return 4;
    }
    return 0;
}
