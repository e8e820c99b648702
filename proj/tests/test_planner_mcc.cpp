#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_common.hpp"

#include "owp/planner_mcc.hpp"

#include <cmath>
#include <set>

using namespace owp;

TEST_CASE("convex room with large range collapses to one clique") {
    const Layout sq = owp::test::load_fixture("square4.json");
    const Partition part = hyper_triangulate(sq, 2.0);
    const PVGraph g = build_pv_graph(part, sq, 10.0);
    const auto cliques = mcc(g);
    REQUIRE(cliques.size() == 1);
    CHECK(cliques[0].members.size() == g.tris.size());
    CHECK(cliques[0].vis.area() > 0.0);

    const Deployment d = place_aps(cliques, sq, 10.0);
    CHECK(d.aps.size() == 1);
    CHECK(verify_coverage(d, sq, 10.0).covered);
}

TEST_CASE("mcc output partitions the node set with non-empty visibilities") {
    const Layout l = owp::test::load_fixture("lshape.json");
    const double r = 1.0;
    const Partition part = hyper_triangulate(l, default_R(r));
    const PVGraph g = build_pv_graph(part, l, r);
    const auto cliques = mcc(g);

    std::set<int> seen;
    for (const Clique& c : cliques) {
        CHECK_FALSE(c.members.empty());
        CHECK(c.vis.area() > g.cfg.eps_area);
        for (int m : c.members) {
            CHECK(seen.insert(m).second); // disjoint
            // Pairwise adjacency inside the clique.
            for (int m2 : c.members)
                if (m != m2) CHECK(g.adj[m][m2]);
        }
    }
    CHECK(seen.size() == g.tris.size()); // exhaustive
}

TEST_CASE("cliques are maximal with respect to the guarded scan") {
    const Layout l = owp::test::load_fixture("lshape.json");
    const double r = 1.0;
    const Partition part = hyper_triangulate(l, default_R(r));
    const PVGraph g = build_pv_graph(part, l, r);
    const auto cliques = mcc(g);
    // No node consumed later could have joined an earlier clique.
    for (std::size_t k = 0; k + 1 < cliques.size(); ++k) {
        for (std::size_t j = k + 1; j < cliques.size(); ++j) {
            for (int cand : cliques[j].members) {
                bool adjacent_all = true;
                for (int m : cliques[k].members)
                    if (!g.adj[cand][m]) adjacent_all = false;
                if (!adjacent_all) continue;
                std::vector<int> grown = cliques[k].members;
                grown.push_back(cand);
                CHECK(clique_visibility(grown, g).area() <= g.cfg.eps_area);
            }
        }
    }
}

TEST_CASE("mcc deployment covers the L-shape end to end") {
    const Layout l = owp::test::load_fixture("lshape.json");
    for (double r : {0.8, 1.5}) {
        const Partition part = hyper_triangulate(l, default_R(r));
        const PVGraph g = build_pv_graph(part, l, r);
        const Deployment d = place_aps(mcc(g), l, r);
        const CoverageReport rep = verify_coverage(d, l, r);
        CAPTURE(r);
        CHECK(rep.covered);
        CHECK(rep.outage_area <= kEpsCoverage);
        CHECK(rep.outage_fraction <= kEpsCoverage / l.area());
    }
}

TEST_CASE("square-room analytic thresholds for one AP") {
    const Layout sq = owp::test::load_fixture("square4.json");
    Deployment d;
    d.method = "manual";
    d.aps = {{2.0, 2.0}};
    d.source = {-1};
    // sqrt(2) * s0 / 2 = 2.828 m separates success from failure.
    d.r = 2.9;
    CHECK(verify_coverage(d, sq, 2.9).covered);
    d.r = 2.7;
    const CoverageReport rep = verify_coverage(d, sq, 2.7);
    CHECK_FALSE(rep.covered);
    CHECK(rep.outage_area > kEpsCoverage);
    // Four corner lobes survive.
    CHECK(rep.outage_region.polys.size() == 4);
}

TEST_CASE("verify_coverage works on manual multi-AP deployments") {
    const Layout sq = owp::test::load_fixture("square4.json");
    Deployment d;
    d.method = "manual";
    // Fig.-4(d)-style four-AP grid; threshold sqrt(2) * s0 / 4 = 1.414.
    d.aps = {{1, 1}, {3, 1}, {1, 3}, {3, 3}};
    d.source = {-1, -1, -1, -1};
    d.r = 1.45;
    CHECK(verify_coverage(d, sq, 1.45).covered);
    d.r = 1.38;
    CHECK_FALSE(verify_coverage(d, sq, 1.38).covered);
}

TEST_CASE("mcc and placement are deterministic") {
    const Layout l = owp::test::load_fixture("lshape.json");
    const double r = 1.0;
    const Partition part = hyper_triangulate(l, default_R(r));
    const PVGraph g1 = build_pv_graph(part, l, r);
    const PVGraph g2 = build_pv_graph(part, l, r);
    const auto c1 = mcc(g1);
    const auto c2 = mcc(g2);
    REQUIRE(c1.size() == c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i) CHECK(c1[i].members == c2[i].members);

    const Deployment d1 = place_aps(c1, l, r);
    const Deployment d2 = place_aps(c2, l, r);
    REQUIRE(d1.aps.size() == d2.aps.size());
    for (std::size_t i = 0; i < d1.aps.size(); ++i) {
        CHECK(d1.aps[i].x == d2.aps[i].x); // bit-identical
        CHECK(d1.aps[i].y == d2.aps[i].y);
    }
}

TEST_CASE("planner rejects nodes with empty visibility") {
    const Layout comb = owp::test::load_fixture("comb6.json");
    // R far above sqrt(3) r: thin prong-tip triangles end up far from any
    // point within range of all three vertices.
    const double r = 0.35;
    const Partition part = hyper_triangulate(comb, 3.0);
    const PVGraph g = build_pv_graph(part, comb, r);
    REQUIRE(g.any_empty());
    CHECK_THROWS(mcc(g));
}
