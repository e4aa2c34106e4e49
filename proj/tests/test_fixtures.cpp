// Pinned facts about the reconstructed figure graphs. Numeric values were
// frozen from brute-force sweeps; the structural claims (which deletions land
// on KE graphs, which sets are supportive, and so on) are re-derived here
// through library calls that are themselves oracle-tested.
#include "doctest.h"
#include "kegraph/classify.hpp"
#include "kegraph/critical.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/matching.hpp"

using keg::Graph;
using keg::VertexSet;
using keg::make_edge;

namespace {

Graph fix(const char* name) { return keg::fixture(name); }

bool ke_after_deleting_pair(const Graph& g, int x, int y) {
    VertexSet keep = VertexSet::full(g.vertex_count());
    keep.erase(x);
    keep.erase(y);
    return keg::is_ke(g.induced_subgraph(keep).graph);
}

int edge_index(const Graph& g, int u, int v) {
    const auto e = make_edge(u, v);
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        if (g.edges()[i] == e) return static_cast<int>(i);
    REQUIRE_MESSAGE(false, "edge not in graph");
    return -1;
}

}  // namespace

TEST_CASE("fig1-G1: vertex almost KE but not edge almost KE") {
    Graph g = fix("fig1-G1");
    auto c = keg::classify(g);
    CHECK(c.n == 7);
    CHECK(c.alpha == 3);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    CHECK(c.vertex_leaves_ke[3]);
    CHECK_FALSE(c.vertex_leaves_ke[6]);
    CHECK(c.vertex_almost.has_value());
    CHECK_FALSE(c.edge_almost.has_value());
}

TEST_CASE("fig1-G2: edge almost KE but not vertex almost KE") {
    Graph g = fix("fig1-G2");
    auto c = keg::classify(g);
    CHECK(c.n == 8);
    CHECK(c.alpha == 3);
    CHECK(c.mu == 4);
    CHECK(c.one_ke);
    CHECK(c.has_pm);
    CHECK_FALSE(c.edge_leaves_ke[edge_index(g, 1, 2)]);
    CHECK(c.edge_leaves_ke[edge_index(g, 2, 3)]);
    CHECK(c.edge_almost.has_value());
    CHECK_FALSE(c.vertex_almost.has_value());
}

TEST_CASE("fig2-G1: a KE graph with an edge critical for both invariants") {
    Graph g = fix("fig2-G1");
    auto c = keg::classify(g);
    CHECK(c.n == 6);
    CHECK(c.alpha == 3);
    CHECK(c.mu == 3);
    CHECK(c.ke);
    const int i = edge_index(g, 3, 4);
    CHECK(c.alpha_critical_edge[i]);
    CHECK(c.mu_critical_edge[i]);
}

TEST_CASE("fig2-G2: an edge critical for independence only") {
    Graph g = fix("fig2-G2");
    auto c = keg::classify(g);
    CHECK(c.n == 7);
    CHECK(c.alpha == 3);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    const int i = edge_index(g, 0, 4);
    CHECK(c.alpha_critical_edge[i]);
    CHECK_FALSE(c.mu_critical_edge[i]);
    const int j = edge_index(g, 3, 5);
    CHECK_FALSE(c.alpha_critical_edge[j]);
    CHECK_FALSE(c.mu_critical_edge[j]);
}

TEST_CASE("fig2-G3: an edge critical for matching only") {
    Graph g = fix("fig2-G3");
    auto c = keg::classify(g);
    CHECK(c.n == 6);
    CHECK(c.alpha == 2);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    const int i = edge_index(g, 1, 2);
    CHECK_FALSE(c.alpha_critical_edge[i]);
    CHECK(c.mu_critical_edge[i]);
}

TEST_CASE("fig3-G1: an independent set whose neighborhood matches into it") {
    Graph g = fix("fig3-G1");
    CHECK(keg::matching_number(g) == 3);
    VertexSet a(6, {0, 4});
    CHECK(keg::is_independent(g, a));
    VertexSet nbh = keg::neighborhood(g, a);
    CHECK(nbh == VertexSet(6, {1, 5}));
    CHECK(keg::matching_from_into(g, nbh, a).has_value());
}

TEST_CASE("fig3-G2: a neighborhood that cannot match into its set") {
    Graph g = fix("fig3-G2");
    CHECK(keg::matching_number(g) == 2);
    VertexSet a(6, {5});
    VertexSet nbh = keg::neighborhood(g, a);
    CHECK(nbh == VertexSet(6, {2, 3}));
    CHECK_FALSE(keg::matching_from_into(g, nbh, a).has_value());
}

TEST_CASE("fig4-G1: a supportive maximum independent set via a vertex") {
    Graph g = fix("fig4-G1");
    auto c = keg::classify(g);
    CHECK(c.n == 5);
    CHECK(c.alpha == 2);
    CHECK(c.mu == 2);
    CHECK(c.one_ke);
    VertexSet a(5, {0, 2});
    CHECK(keg::is_independent(g, a));
    CHECK(keg::alpha(g) == a.size());
    auto w = keg::is_supportive(g, a);
    REQUIRE(w.has_value());
    CHECK_FALSE(w->via_edge);
    CHECK(w->v == 1);
}

TEST_CASE("fig4-G2: a supportive set that is not independent, via an edge") {
    Graph g = fix("fig4-G2");
    auto c = keg::classify(g);
    CHECK(c.n == 6);
    CHECK(c.alpha == 2);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    VertexSet b(6, {2, 5});
    CHECK_FALSE(keg::is_independent(g, b));
    auto w = keg::is_supportive(g, b);
    REQUIRE(w.has_value());
    CHECK(w->via_edge);
    CHECK(w->e == make_edge(0, 3));
}

TEST_CASE("fig5-G1: full critical profile with a tight deletion bound") {
    Graph g = fix("fig5-G1");
    auto c = keg::classify(g);
    CHECK(c.n == 8);
    CHECK(c.alpha == 4);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    auto pr = keg::critical_profile(g);
    CHECK(pr.d == 1);
    auto cx = keg::core_and_xi(g);
    CHECK(cx.core == VertexSet(8, {6, 7}));
    CHECK(cx.xi == 2);
    CHECK(pr.alpha_prime == 3);
    REQUIRE(pr.max_critical.size() == 1);
    CHECK(pr.max_critical.front() == VertexSet(8, {5, 6, 7}));
    CHECK(pr.ker == VertexSet(8, {6, 7}));
    CHECK(pr.epsilon == 2);
    CHECK(pr.diadem == VertexSet(8, {5, 6, 7}));
    CHECK(pr.beta == 3);
    CHECK(c.rho_v == 4);
    CHECK(c.rho_v == c.n + pr.d - cx.xi - pr.beta); // bound met with equality
}

TEST_CASE("fig5-G2: full critical profile, two maximum critical sets") {
    Graph g = fix("fig5-G2");
    auto c = keg::classify(g);
    CHECK(c.n == 8);
    CHECK(c.alpha == 4);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    auto pr = keg::critical_profile(g);
    CHECK(pr.d == 1);
    auto cx = keg::core_and_xi(g);
    CHECK(cx.core == VertexSet(8, {5, 6}));
    CHECK(cx.xi == 2);
    CHECK(pr.alpha_prime == 3);
    REQUIRE(pr.max_critical.size() == 2);
    CHECK(pr.max_critical[0] == VertexSet(8, {3, 5, 6}));
    CHECK(pr.max_critical[1] == VertexSet(8, {5, 6, 7}));
    CHECK(pr.ker == VertexSet(8, {5, 6}));
    CHECK(pr.epsilon == 2);
    CHECK(pr.diadem == VertexSet(8, {3, 5, 6, 7}));
    CHECK(pr.beta == 4);
    CHECK(c.rho_v == 3);
    CHECK(c.rho_v == c.n + pr.d - cx.xi - pr.beta); // bound met with equality
}

TEST_CASE("fig6-G1: a near-complete graph where an edge's endpoints work") {
    Graph g = fix("fig6-G1");
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 14); // K6 minus one edge
    CHECK_FALSE(g.adjacent(4, 5));
    auto c = keg::classify(g);
    CHECK(c.one_ke);
    CHECK(g.adjacent(0, 3));
    CHECK(ke_after_deleting_pair(g, 0, 3));
}

TEST_CASE("fig6-G2: independent side forms the core, empty diadem") {
    Graph g = fix("fig6-G2");
    auto c = keg::classify(g);
    CHECK(c.n == 7);
    CHECK(c.alpha == 3);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    CHECK(c.vertex_leaves_ke[3]);
    auto cx = keg::core_and_xi(g);
    CHECK(cx.core == VertexSet(7, {4, 5, 6}));
    CHECK(cx.xi == 3);
    auto pr = keg::critical_profile(g);
    CHECK(pr.diadem.empty());
    CHECK(pr.beta == 0);
}

TEST_CASE("fig7-G1: deletion bound met with equality at zero difference") {
    Graph g = fix("fig7-G1");
    auto c = keg::classify(g);
    CHECK(c.n == 9);
    CHECK(c.alpha == 4);
    CHECK(c.mu == 4);
    CHECK(c.one_ke);
    auto pr = keg::critical_profile(g);
    auto cx = keg::core_and_xi(g);
    CHECK(pr.d == 0);
    CHECK(cx.xi == 0);
    CHECK(pr.diadem == VertexSet(9, {2, 4, 7}));
    CHECK(pr.beta == 3);
    CHECK(c.rho_v == 6);
    CHECK(c.rho_v == c.n + pr.d - cx.xi - pr.beta); // equality
}

TEST_CASE("fig7-G2: second deletion-bound example") {
    Graph g = fix("fig7-G2");
    auto c = keg::classify(g);
    CHECK(c.n == 9);
    CHECK(c.alpha == 4);
    CHECK(c.mu == 4);
    CHECK(c.one_ke);
    auto pr = keg::critical_profile(g);
    auto cx = keg::core_and_xi(g);
    CHECK(pr.d == 0);
    CHECK(cx.core == VertexSet(9, {8}));
    CHECK(cx.xi == 1);
    CHECK(pr.ker.empty());
    // {0,8} is independent with N({0,8}) = {1,7}, so vertex 0 joins 7 and 8
    // in the union of the critical independent sets.
    CHECK(keg::is_critical_set(g, VertexSet(9, {0, 8})));
    CHECK(pr.diadem == VertexSet(9, {0, 7, 8}));
    CHECK(pr.beta == 3);
    CHECK(c.rho_v == 5);
    CHECK(c.rho_v == c.n + pr.d - cx.xi - pr.beta); // bound attained: 9+0-1-3
}

TEST_CASE("fig8-G1: almost KE both ways without being almost bipartite") {
    Graph g = fix("fig8-G1");
    auto c = keg::classify(g);
    CHECK(c.n == 7);
    CHECK(c.one_ke);
    CHECK_FALSE(keg::is_almost_bipartite(g));
    CHECK(c.vertex_almost.has_value());
    CHECK(c.edge_almost.has_value());
    CHECK_FALSE(c.alpha_critical_vertex[6]);
    CHECK_FALSE(c.mu_critical_vertex[6]);
    const int i = edge_index(g, 3, 6);
    CHECK(c.alpha_critical_edge[i]);
    CHECK_FALSE(c.mu_critical_edge[i]);
}

TEST_CASE("fig9-G1: deletions land on KE only at non-critical vertices") {
    Graph g = fix("fig9-G1");
    auto c = keg::classify(g);
    CHECK(c.n == 8);
    CHECK(c.alpha == 4);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    CHECK(c.vertex_leaves_ke[4]);
    CHECK_FALSE(c.vertex_leaves_ke[7]);
    CHECK(c.alpha_critical_vertex[7]);
}

TEST_CASE("fig9-G2: a doubly critical vertex blocks the KE deletion") {
    Graph g = fix("fig9-G2");
    auto c = keg::classify(g);
    CHECK(c.n == 7);
    CHECK(c.alpha == 3);
    CHECK(c.mu == 3);
    CHECK(c.one_ke);
    CHECK(c.alpha_critical_vertex[2]);
    CHECK(c.mu_critical_vertex[2]);
    CHECK_FALSE(c.vertex_leaves_ke[2]);
}

TEST_CASE("fig10-G1: matching exceeds independence with a perfect matching") {
    auto c = keg::classify(fix("fig10-G1"));
    CHECK(c.n == 8);
    CHECK(c.alpha == 3);
    CHECK(c.mu == 4);
    CHECK(c.one_ke);
    CHECK(c.has_pm);
    CHECK(c.mu == c.alpha + 1);
}

TEST_CASE("fig10-G2: equal invariants, no perfect matching") {
    Graph g = fix("fig10-G2");
    auto c = keg::classify(g);
    CHECK(c.n == 5);
    CHECK(c.alpha == 2);
    CHECK(c.mu == 2);
    CHECK(c.one_ke);
    CHECK_FALSE(c.has_pm);
    CHECK_FALSE(c.critical_vertex_almost);
    auto cx = keg::core_and_xi(g);
    CHECK(cx.core.empty());
    auto pr = keg::critical_profile(g);
    CHECK(pr.diadem == VertexSet(5, {4}));
}

TEST_CASE("fig10-G3: matching strictly below independence") {
    auto c = keg::classify(fix("fig10-G3"));
    CHECK(c.n == 6);
    CHECK(c.alpha == 3);
    CHECK(c.mu == 2);
    CHECK(c.one_ke);
    CHECK(c.mu < c.alpha);
}
