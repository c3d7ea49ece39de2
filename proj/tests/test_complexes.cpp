#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

#include "hmt/errors.hpp"
#include "hmt/gabber.hpp"
#include "hmt/homology.hpp"
#include "hmt/metric_space.hpp"
#include "hmt/nerve.hpp"
#include "hmt/rng.hpp"
#include "hmt/simplicial.hpp"

#include "fixtures.hpp"

using namespace hmt;
using namespace hmt::topo;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool profiles_equal(const HomologyProfile& a, const HomologyProfile& b, int up_to) {
    for (int p = 0; p <= up_to; ++p) {
        if (a.betti(p) != b.betti(p)) return false;
        if (a.torsion(p) != b.torsion(p)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("builder closes faces and validates") {
    SimplicialComplex c(5);
    c.insert({3, 1, 0, 2});  // unsorted tetrahedron
    c.insert({0, 1});        // duplicate of a face it generates
    c.finish();
    CHECK(c.top_dimension() == 3);
    CHECK(c.count(3) == 1);
    CHECK(c.count(2) == 4);
    CHECK(c.count(1) == 6);
    CHECK(c.count(0) == 5);
    CHECK(c.euler_characteristic() == 2);  // solid tetrahedron plus a stray vertex
    CHECK(c.max_vertex_degree() == 3);
    CHECK_NOTHROW(c.validate());

    CHECK_THROWS_AS(c.insert({0, 0}), ConfigError);
    CHECK_THROWS_AS(c.insert({5}), ConfigError);
    CHECK_THROWS_AS(c.insert({-1, 2}), ConfigError);
    CHECK_THROWS_AS(c.insert({}), ConfigError);
    CHECK_THROWS_AS(c.simplices(4), ConfigError);
}

TEST_CASE("complex JSON round-trip and malformed input") {
    const auto c = fixtures::projective_plane6();
    const auto j = complex_to_json(c);
    const auto back = complex_from_json(j);
    CHECK(back.n_vertices == 6);
    CHECK(back.count(2) == 10);
    CHECK(complex_to_json(back) == j);

    nlohmann::json no_vertices;
    no_vertices["simplices"] = nlohmann::json::object();
    CHECK_THROWS_AS(complex_from_json(no_vertices), ConfigError);

    nlohmann::json bad_arity;
    bad_arity["vertices"] = 3;
    bad_arity["simplices"]["2"] = nlohmann::json::array({nlohmann::json::array({0, 1})});
    CHECK_THROWS_AS(complex_from_json(bad_arity), ConfigError);

    nlohmann::json bad_key;
    bad_key["vertices"] = 3;
    bad_key["simplices"]["x"] = nlohmann::json::array();
    CHECK_THROWS_AS(complex_from_json(bad_key), ConfigError);
}

TEST_CASE("homology regression corpus") {
    struct Expected {
        const char* name;
        SimplicialComplex c;
        long long b0, b1, b2;
        std::vector<long> t1;
    };
    const Expected corpus[] = {
        {"circle", fixtures::circle(), 1, 1, 0, {}},
        {"sphere", fixtures::sphere2(), 1, 0, 1, {}},
        {"torus", fixtures::torus7(), 1, 2, 1, {}},
        {"projective plane", fixtures::projective_plane6(), 1, 0, 0, {2}},
        {"klein bottle", fixtures::klein_bottle(), 1, 1, 0, {2}},
        {"grid torus", fixtures::grid_torus(5, 5), 1, 2, 1, {}},
    };
    for (const auto& e : corpus) {
        CAPTURE(e.name);
        const auto h = homology(e.c);
        CHECK(h.betti(0) == e.b0);
        CHECK(h.betti(1) == e.b1);
        CHECK(h.betti(2) == e.b2);
        REQUIRE(h.torsion(1).size() == e.t1.size());
        for (std::size_t i = 0; i < e.t1.size(); ++i) CHECK(h.torsion(1)[i] == e.t1[i]);
        CHECK(h.torsion(0).empty());
        CHECK(h.torsion(2).empty());
        CHECK(h.euler_characteristic() == e.c.euler_characteristic());
        CHECK(h.betti(7) == 0);
        CHECK_THROWS_AS(h.betti(-1), ConfigError);
    }
    CHECK(homology(fixtures::projective_plane6()).log_torsion(1) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(homology(fixtures::circle()).log_torsion(1) == 0.0);
}

TEST_CASE("homology is thread-count independent") {
    const auto one = homology(fixtures::torus7(), 1);
    const auto three = homology(fixtures::torus7(), 3);
    CHECK(profiles_equal(one, three, 3));
}

TEST_CASE("barycentric subdivision preserves homology") {
    const SimplicialComplex originals[] = {fixtures::circle(), fixtures::torus7(),
                                           fixtures::projective_plane6()};
    for (const auto& c : originals) {
        const auto sub = fixtures::barycentric_subdivision(c);
        CHECK(sub.n_vertices > c.n_vertices);
        CHECK(sub.euler_characteristic() == c.euler_characteristic());
        CHECK(profiles_equal(homology(sub), homology(c), 3));
    }
}

TEST_CASE("disjoint unions add degreewise") {
    const auto rp2 = fixtures::projective_plane6();

    const auto a = fixtures::disjoint_union(rp2, fixtures::circle());
    auto h = homology(a);
    CHECK(h.betti(0) == 2);
    CHECK(h.betti(1) == 1);
    REQUIRE(h.torsion(1).size() == 1);
    CHECK(h.torsion(1)[0] == 2);
    CHECK(h.euler_characteristic() ==
          rp2.euler_characteristic() + fixtures::circle().euler_characteristic());

    const auto b = fixtures::disjoint_union(rp2, rp2);
    h = homology(b);
    CHECK(h.betti(0) == 2);
    CHECK(h.betti(1) == 0);
    REQUIRE(h.torsion(1).size() == 2);
    CHECK(h.torsion(1)[0] == 2);
    CHECK(h.torsion(1)[1] == 2);
}

TEST_CASE("flat torus metric wraps in every axis") {
    const auto t = FiniteMetricSpace::flat_torus(1, 8);
    CHECK(t.size() == 8);
    CHECK(t.model_dimension() == 1);
    CHECK(t.model_volume() == 1.0);
    CHECK(t.distance(0, 4) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(t.distance(0, 7) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK_NOTHROW(t.validate());

    const auto t2 = FiniteMetricSpace::flat_torus(2, 5);
    CHECK(t2.size() == 25);
    CHECK(t2.model_dimension() == 2);
    CHECK(t2.distance(0, 1) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(t2.distance(0, 6) == doctest::Approx(std::sqrt(0.08)).epsilon(1e-14));
    CHECK_NOTHROW(t2.validate());

    CHECK_THROWS_AS(FiniteMetricSpace::flat_torus(0, 5), ConfigError);
    CHECK_THROWS_AS(FiniteMetricSpace::flat_torus(4, 5), ConfigError);
    CHECK_THROWS_AS(FiniteMetricSpace::flat_torus(2, 1), ConfigError);
    CHECK_THROWS_AS(FiniteMetricSpace::flat_torus(3, 60), ConfigError);  // 216000 points
}

TEST_CASE("sphere and projective-plane metrics") {
    const auto s = FiniteMetricSpace::round_sphere(300);
    CHECK(s.size() == 300);
    CHECK_NOTHROW(s.validate());
    CHECK(s.model_volume() == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(s.model_dimension() == 2);
    double s_max = 0.0;
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j) s_max = std::max(s_max, s.distance(i, j));
    CHECK(s_max <= kPi + 1e-9);
    CHECK(s_max > 2.9);  // the spiral nearly reaches antipodal pairs

    const auto p = FiniteMetricSpace::projective_plane(300);
    CHECK_NOTHROW(p.validate());
    CHECK(p.model_volume() == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    double p_max = 0.0;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j) {
            p_max = std::max(p_max, p.distance(i, j));
            // The quotient metric never exceeds the sphere distance.
            CHECK(p.distance(i, j) <= s.distance(i, j) + 1e-12);
        }
    CHECK(p_max <= kPi / 2.0 + 1e-9);

    CHECK_THROWS_AS(FiniteMetricSpace::round_sphere(3), ConfigError);
    CHECK_THROWS_AS(FiniteMetricSpace::projective_plane(3), ConfigError);
}

TEST_CASE("explicit matrices are validated") {
    const std::vector<std::vector<double>> good = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const auto m = FiniteMetricSpace::from_matrix(good);
    CHECK(m.size() == 3);
    CHECK(m.model_dimension() == 0);
    CHECK(std::isnan(m.model_volume()));

    auto bad = good;
    bad[0][1] = 2.0;  // asymmetric
    CHECK_THROWS_AS(FiniteMetricSpace::from_matrix(bad), ConfigError);

    bad = good;
    bad[1][1] = 0.5;  // nonzero diagonal
    CHECK_THROWS_AS(FiniteMetricSpace::from_matrix(bad), ConfigError);

    // d(0,2) = 10 through a unit-length two-hop path: triangle violation.
    const std::vector<std::vector<double>> wide = {{0, 1, 10}, {1, 0, 1}, {10, 1, 0}};
    CHECK_THROWS_AS(FiniteMetricSpace::from_matrix(wide), ConfigError);

    CHECK_THROWS_AS(FiniteMetricSpace::from_matrix({{0, 1}, {1}}), ConfigError);
}

TEST_CASE("greedy net is separated, maximal, and index-ordered") {
    const auto t = FiniteMetricSpace::flat_torus(1, 30);
    const auto net = build_net(t, 0.11);
    CHECK(net.centers == std::vector<int>{0, 4, 8, 12, 16, 20, 24});
    CHECK_NOTHROW(net.validate());

    Net crowded = net;
    crowded.centers.push_back(25);  // one step from center 24
    CHECK_THROWS_AS(crowded.validate(), InternalError);

    Net sparse = net;
    sparse.centers.pop_back();  // leaves points with no center within 0.11
    CHECK_THROWS_AS(sparse.validate(), InternalError);

    CHECK_THROWS_AS(build_net(t, 0.0), ConfigError);
}

TEST_CASE("cech nerve of a circle sample is a cycle") {
    const auto t = FiniteMetricSpace::flat_torus(1, 30);
    const auto net = build_net(t, 0.11);
    const auto nerve = cech_nerve(net, 0.11, 3);
    CHECK_FALSE(nerve.dimension_cap_hit);
    CHECK(nerve.complex.n_vertices == 7);
    CHECK(nerve.complex.top_dimension() == 1);
    CHECK(nerve.complex.count(1) == 7);
    const auto h = homology(nerve.complex);
    CHECK(h.betti(0) == 1);
    CHECK(h.betti(1) == 1);
}

TEST_CASE("cech simplices are always rips simplices") {
    const auto sp = FiniteMetricSpace::projective_plane(500);
    const auto net = build_net(sp, 0.4);
    const auto cech = cech_nerve(net, 0.4, 3);
    const auto rips = rips_nerve(net, 0.4, 3);
    REQUIRE(cech.complex.n_vertices == rips.complex.n_vertices);
    for (int p = 1; p <= cech.complex.top_dimension(); ++p) {
        const auto& cs = cech.complex.simplices(p);
        const auto& rs = rips.complex.simplices(p);
        CHECK(std::includes(rs.begin(), rs.end(), cs.begin(), cs.end()));
    }
}

TEST_CASE("rips simplices admit cech witnesses at the planar factor") {
    // Pairwise distance <= 2r in a locally flat patch forces a common point
    // within r * 2/sqrt(3) of all vertices (circumradius bound); the sampled
    // witness pays at most half a grid diagonal on top.
    const int res = 40;
    const auto t = FiniteMetricSpace::flat_torus(2, res);
    const auto net = build_net(t, 0.12);
    const double r = 0.12;
    const auto rips = rips_nerve(net, r, 2);
    const double slack = std::sqrt(2.0) / (2.0 * res);
    const auto cech = cech_nerve(net, r * 2.0 / std::sqrt(3.0) + slack, 2);
    for (int p = 1; p <= rips.complex.top_dimension(); ++p) {
        const auto& rs = rips.complex.simplices(p);
        const auto& cs = cech.complex.simplices(p);
        CHECK(std::includes(cs.begin(), cs.end(), rs.begin(), rs.end()));
    }
}

TEST_CASE("nerve pipeline recovers the 2-torus") {
    const auto t = FiniteMetricSpace::flat_torus(2, 45);
    PipelineOptions opts;
    opts.table = {{12.0, 1, 0.2}};
    const auto pr = nerve_pipeline(t, 0.10, 0.10, opts);

    CHECK(pr.report.n_centers == 81);
    CHECK(pr.report.cover_verified);
    CHECK_FALSE(pr.report.radius_below_recommended);
    CHECK(pr.profile.betti(0) == 1);
    CHECK(pr.profile.betti(1) == 2);
    CHECK(pr.profile.betti(2) == 1);
    CHECK(pr.profile.torsion(1).empty());

    // Torsion-free homology passes the scanned-constant comparison trivially.
    CHECK(pr.report.gabber_checked);
    CHECK(pr.report.gabber_bound_ok);
    CHECK(pr.report.log_torsion_p1 == 0.0);

    CHECK(pr.report.net_size_bound_ref ==
          doctest::Approx(geom::net_size_bound(2, 1.0, 0.4)).epsilon(1e-12));
    CHECK(pr.report.degree_bound_ref ==
          doctest::Approx(geom::degree_bound(2, 0.4)).epsilon(1e-12));
    CHECK(pr.report.max_degree >= 2);
}

TEST_CASE("pipeline flags a radius below the cover preset") {
    const auto t = FiniteMetricSpace::flat_torus(1, 30);
    const auto pr = nerve_pipeline(t, 0.11, 0.04, {});
    CHECK(pr.report.radius_below_recommended);
    CHECK_FALSE(pr.report.cover_verified);
    CHECK_FALSE(pr.report.gabber_checked);
    // One-dimensional models carry no reference geometry.
    CHECK(std::isnan(pr.report.net_size_bound_ref));
    CHECK(std::isnan(pr.report.degree_bound_ref));
}

TEST_CASE("dimension cap reporting") {
    // Five points, all pairwise at distance 0.1: every tuple qualifies.
    std::vector<std::vector<double>> d(5, std::vector<double>(5, 0.1));
    for (int i = 0; i < 5; ++i) d[i][i] = 0.0;
    const auto sp = FiniteMetricSpace::from_matrix(d);
    const auto net = build_net(sp, 0.05);
    REQUIRE(net.centers.size() == 5);

    const auto capped = cech_nerve(net, 0.12, 2);
    CHECK(capped.dimension_cap_hit);
    CHECK(capped.complex.top_dimension() == 2);

    const auto rips = rips_nerve(net, 0.06, 2);
    CHECK(rips.dimension_cap_hit);
    CHECK(rips.complex.count(2) == 10);

    const auto full = cech_nerve(net, 0.12, 4);
    CHECK_FALSE(full.dimension_cap_hit);
    CHECK(full.complex.top_dimension() == 4);
    CHECK(homology(full.complex).betti(0) == 1);
}

TEST_CASE("random bounded-degree complexes respect their caps deterministically") {
    Rng a(5), b(5);
    bool identical = true, caps = true;
    for (int trial = 0; trial < 200; ++trial) {
        const auto c1 = random_bounded_degree_complex(12, 40, a);
        const auto c2 = random_bounded_degree_complex(12, 40, b);
        identical = identical && complex_to_json(c1) == complex_to_json(c2);
        caps = caps && c1.n_vertices <= 40 && c1.max_vertex_degree() <= 12;
        c1.validate();
    }
    CHECK(identical);
    CHECK(caps);

    Rng r(0);
    CHECK_THROWS_AS(random_bounded_degree_complex(12, 65, r), ConfigError);
    CHECK_THROWS_AS(random_bounded_degree_complex(1, 40, r), ConfigError);
    CHECK_THROWS_AS(random_bounded_degree_complex(12, 3, r), ConfigError);
}

TEST_CASE("gabber scan is thread-count independent with faithful witnesses") {
    GabberScanParams p;
    p.trials = 400;
    p.seed = 21;
    p.n_threads = 1;
    const auto one = gabber_scan(p);
    p.n_threads = 3;
    const auto three = gabber_scan(p);

    REQUIRE(one.samples.size() == 400);
    REQUIRE(three.samples.size() == 400);
    bool same = true;
    for (std::size_t i = 0; i < one.samples.size(); ++i)
        same = same && one.samples[i].n_vertices == three.samples[i].n_vertices &&
               one.samples[i].log_tors_p1 == three.samples[i].log_tors_p1 &&
               one.samples[i].log_tors_p2 == three.samples[i].log_tors_p2;
    CHECK(same);
    CHECK(one.witness_p1.trial == three.witness_p1.trial);
    CHECK(one.c_estimate(1) == three.c_estimate(1));
    CHECK(one.c_estimate(2) == three.c_estimate(2));

    if (one.witness_p1.trial >= 0) {
        // The stored witness complex reproduces the recorded ratio.
        const auto h = homology(one.witness_p1.complex);
        CHECK(h.log_torsion(1) / one.witness_p1.complex.n_vertices ==
              doctest::Approx(one.witness_p1.ratio).epsilon(1e-12));
        CHECK(one.witness_p1.ratio == one.c_estimate(1));
    }

    const auto table = one.table();
    REQUIRE(table.size() == 2);
    CHECK(table[0].degree == 12.0);
    CHECK(table[0].p == 1);
    CHECK(table[0].c == one.c_estimate(1));
    CHECK(table[1].p == 2);

    CHECK_THROWS_AS(one.c_estimate(3), ConfigError);
    GabberScanParams bad;
    bad.trials = 0;
    CHECK_THROWS_AS(gabber_scan(bad), ConfigError);
}

TEST_CASE("scan maxima are pinned by the identification gadgets") {
    GabberScanParams p;
    p.trials = 2000;
    p.seed = 3;
    const auto scan = gabber_scan(p);
    // The 6-vertex projective plane is in the draw pool: log(2)/6 in degree
    // 1; its suspension shifts the same torsion to degree 2 on 8 vertices.
    CHECK(scan.c_estimate(1) == doctest::Approx(std::log(2.0) / 6.0).epsilon(1e-12));
    CHECK(scan.c_estimate(2) == doctest::Approx(std::log(2.0) / 8.0).epsilon(1e-12));
}

TEST_CASE("gabber table JSON round-trip") {
    GabberScanParams p;
    p.trials = 200;
    const auto table = gabber_scan(p).table();
    const auto j = gabber_table_to_json(table);
    const auto back = gabber_table_from_json(j);
    REQUIRE(back.size() == table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(back[i].degree == table[i].degree);
        CHECK(back[i].p == table[i].p);
        CHECK(back[i].c == table[i].c);
    }

    CHECK_THROWS_AS(gabber_table_from_json(nlohmann::json::array()), ConfigError);
    nlohmann::json missing;
    missing["entries"] = nlohmann::json::array({nlohmann::json{{"degree", 12.0}, {"p", 1}}});
    CHECK_THROWS_AS(gabber_table_from_json(missing), ConfigError);
}
