#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "json.hpp"

#include "hmt/bigint.hpp"
#include "hmt/errors.hpp"
#include "hmt/gl_model.hpp"
#include "hmt/schreier.hpp"

using namespace hmt;
using namespace hmt::gl;

TEST_CASE("block table validation and scaling") {
    BlockTable b;
    CHECK(b.max_diameter() == 1.0);
    b.a_minus = 2.5;
    CHECK(b.max_diameter() == 2.5);
    CHECK_NOTHROW(b.validate());

    b.v1 = 0.0;
    CHECK_THROWS_AS(b.validate(), ConfigError);
    b.v1 = -1.0;
    CHECK_THROWS_AS(b.validate(), ConfigError);
    b.v1 = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(b.validate(), ConfigError);
}

TEST_CASE("block table JSON round-trip with defaults") {
    BlockTable b;
    b.v0 = 1.5;
    b.b_minus = 0.25;
    const auto back = BlockTable::from_json(b.to_json());
    CHECK(back.v0 == 1.5);
    CHECK(back.b_minus == 0.25);
    CHECK(back.a_plus == 1.0);

    const auto partial = BlockTable::from_json(nlohmann::json{{"v1", 2.0}});
    CHECK(partial.v1 == 2.0);
    CHECK(partial.v0 == 1.0);

    CHECK_THROWS_AS(BlockTable::from_json(nlohmann::json{{"v0", -1.0}}), ConfigError);
    CHECK_THROWS_AS(BlockTable::from_json(nlohmann::json{{"v0", "x"}}), ConfigError);
}

TEST_CASE("manifold diameter bound is exactly multiplicative in the block scale") {
    BlockTable unit;
    BlockTable scaled;
    scaled.v0 = scaled.v1 = scaled.a_plus = scaled.a_minus = scaled.b_plus = scaled.b_minus = 3.0;
    for (const long long g : {0LL, 1LL, 5LL, 40LL}) {
        CHECK(manifold_diameter_upper(g, unit) == 2.0 * static_cast<double>(g) + 2.0);
        CHECK(manifold_diameter_upper(g, scaled) == 3.0 * manifold_diameter_upper(g, unit));
    }
    CHECK_THROWS_AS(manifold_diameter_upper(-1, unit), ConfigError);
}

TEST_CASE("descriptors carry exactly one marked vertex") {
    GLDescriptor m;
    m.graph = schreier::sample_schreier(6, 1);
    m.tau.assign(6, 0);
    CHECK_THROWS_AS(m.validate(), ConfigError);  // nothing marked
    m.tau[2] = 1;
    CHECK_NOTHROW(m.validate());
    m.tau[4] = 1;
    CHECK_THROWS_AS(m.validate(), ConfigError);  // two marked
    m.tau.assign(5, 1);
    CHECK_THROWS_AS(m.validate(), ConfigError);  // length mismatch
}

TEST_CASE("admitted graph diameter steps at block multiples") {
    BlockTable unit;
    CHECK(max_graph_diameter_admitted(4.0, unit) == 1);
    CHECK(max_graph_diameter_admitted(2.0, unit) == 0);
    CHECK(max_graph_diameter_admitted(1.9, unit) == -1);
    CHECK(max_graph_diameter_admitted(6.0, unit) == 2);
    CHECK(max_graph_diameter_admitted(5.99, unit) == 1);

    BlockTable wide;
    wide.b_plus = 2.0;  // max block diameter 2: bound 4(g + 1)
    CHECK(max_graph_diameter_admitted(8.0, wide) == 1);
    CHECK(max_graph_diameter_admitted(7.99, wide) == 0);

    CHECK_THROWS_AS(max_graph_diameter_admitted(0.0, unit), ConfigError);
}

TEST_CASE("fraction bound: pinned value and cap semantics") {
    const auto at10 = arithmetic_fraction_bound(10.0);
    CHECK(at10.log_bound == doctest::Approx(-729.4765413949414).epsilon(1e-13));
    CHECK(at10.fraction == doctest::Approx(0.0).epsilon(1e-200));

    // At small d the gain term wins; the fraction caps at 1.
    const auto at_half = arithmetic_fraction_bound(0.5);
    CHECK(at_half.log_bound > 0.0);
    CHECK(at_half.fraction == 1.0);

    // The effective bound min(1, exp(log_bound)) never increases.
    double prev = 0.0;
    for (double d = 0.0; d <= 20.0; d += 0.25) {
        const auto fb = arithmetic_fraction_bound(d);
        const double eff = std::min(0.0, fb.log_bound);
        CHECK(eff <= prev + 1e-12);
        CHECK(fb.fraction == (fb.log_bound >= 0.0 ? 1.0 : std::exp(fb.log_bound)));
        prev = eff;
    }

    CHECK_THROWS_AS(arithmetic_fraction_bound(-1.0), ConfigError);
    CHECK_THROWS_AS(arithmetic_fraction_bound(1.0, 0.0), ConfigError);
    CHECK_THROWS_AS(arithmetic_fraction_bound(1.0, 1.0, 1.0, -0.5), ConfigError);
}

TEST_CASE("exact small counts: unit blocks at budget 4 admit diameter 1") {
    BlockTable unit;
    CountOptions opts;
    opts.exact_ceiling = 5;

    // Index 1 (the one-vertex graph) plus the three index-2 subgroups.
    const auto res = count_noncommensurable(4.0, unit, 2, opts);
    CHECK(res.exact_total == 4);
    CHECK(res.estimated_total == 0.0);
    CHECK(res.ceiling_too_low);  // index 3 also has diameter-1 graphs
    REQUIRE(res.per_index.size() == 2);
    CHECK(res.per_index[0].exact);
    CHECK(res.per_index[0].count == 1);
    CHECK(res.per_index[1].count == 3);
    CHECK(res.per_index[1].fraction == 1.0);
}

TEST_CASE("count agrees with a direct filter over the enumeration") {
    BlockTable unit;
    CountOptions opts;
    opts.exact_ceiling = 5;
    const double d_max = 6.0;
    const long long g_max = max_graph_diameter_admitted(d_max, unit);

    const auto res = count_noncommensurable(d_max, unit, 5, opts);
    long direct = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : schreier::enumerate_subgroups(n))
            if (schreier::graph_diameter(g) <= g_max) ++direct;
    CHECK(res.exact_total == direct);
    // Diameter 2 admits up to 17 vertices, so stopping at index 5 truncates;
    // at budget 4 (diameter 1, at most 5 vertices) the same ceiling is total.
    CHECK(res.ceiling_too_low);
    CHECK_FALSE(count_noncommensurable(4.0, unit, 5, opts).ceiling_too_low);
}

TEST_CASE("count is nondecreasing in the budget and in the ceiling") {
    BlockTable unit;
    CountOptions opts;
    opts.exact_ceiling = 5;

    BigInt prev = -1;
    for (const double d : {2.0, 4.0, 6.0, 8.0}) {
        const auto res = count_noncommensurable(d, unit, 5, opts);
        CHECK(res.exact_total >= prev);
        prev = res.exact_total;
    }

    prev = -1;
    for (const int ceiling : {2, 3, 4, 5}) {
        const auto res = count_noncommensurable(6.0, unit, ceiling, opts);
        CHECK(res.exact_total >= prev);
        prev = res.exact_total;
    }
}

TEST_CASE("sampled tail is deterministic across thread counts") {
    BlockTable unit;
    CountOptions a;
    a.exact_ceiling = 4;
    a.sample_trials = 40;
    a.seed = 9;
    a.n_threads = 1;
    CountOptions b = a;
    b.n_threads = 3;

    const auto ra = count_noncommensurable(7.0, unit, 7, a);
    const auto rb = count_noncommensurable(7.0, unit, 7, b);
    CHECK(ra.estimated_total == rb.estimated_total);
    CHECK(ra.stderr_total == rb.stderr_total);
    REQUIRE(ra.per_index.size() == rb.per_index.size());
    for (std::size_t i = 0; i < ra.per_index.size(); ++i) {
        const auto& ri = ra.per_index[i];
        CHECK(ri.estimate == rb.per_index[i].estimate);
        CHECK(ri.fraction >= 0.0);
        CHECK(ri.fraction <= 1.0);
        if (!ri.exact) {
            CHECK(ri.trials == 40);
            CHECK(ri.stderr_est >= 0.0);
        }
    }
}

TEST_CASE("configuration guards") {
    BlockTable unit;
    CountOptions opts;
    CHECK_THROWS_AS(count_noncommensurable(0.0, unit, 5, opts), ConfigError);
    CHECK_THROWS_AS(count_noncommensurable(4.0, unit, 0, opts), ConfigError);
    CHECK_THROWS_AS(count_noncommensurable(4.0, unit, 151, opts), ConfigError);
    opts.exact_ceiling = 8;
    CHECK_THROWS_AS(count_noncommensurable(4.0, unit, 5, opts), ConfigError);
    opts.exact_ceiling = 7;
    opts.sample_trials = 0;
    CHECK_THROWS_AS(count_noncommensurable(4.0, unit, 5, opts), ConfigError);
}
