#pragma once

#include <optional>
#include <vector>

#include "kegraph/graph.hpp"
#include "kegraph/matching.hpp"

namespace keg {

// kappa = n - (alpha + mu). Zero exactly for graphs whose maximum independent
// set and maximum matching together cover all vertices.
int koenig_deficiency(const Graph& g);

bool is_ke(const Graph& g);     // alpha + mu = n
bool is_one_ke(const Graph& g); // alpha + mu = n - 1

// Witness that a set A is supportive: either a vertex v outside A together
// with a matching from V-A-v into A, or an edge xy with both endpoints
// outside A together with a matching from V-A-x-y into A.
struct SupportWitness {
    bool via_edge = false;
    int v = -1;       // valid when !via_edge
    Edge e{0, 0};     // valid when via_edge
    Matching m;
};

// Tries vertices in ascending order, then edges in ascending order.
std::optional<SupportWitness> is_supportive(const Graph& g, const VertexSet& a);

// Least vertex whose deletion leaves a KE graph, provided G itself is not KE.
std::optional<int> vertex_almost_ke(const Graph& g);

// Least edge whose deletion leaves a KE graph, provided G itself is not KE.
std::optional<Edge> edge_almost_ke(const Graph& g);

// Non-KE graphs where every single vertex (edge) deletion leaves a KE graph.
bool critical_vertex_almost_ke(const Graph& g);
bool critical_edge_almost_ke(const Graph& g);

int rho_v(const Graph& g); // number of vertices v with G-v KE
int rho_e(const Graph& g); // number of edges e with G-e KE

// Everything the deletion sweeps can tell about one graph, computed in a
// single pass over all vertex and edge deletions.
struct Classification {
    int n = 0;
    int m = 0;
    int alpha = 0;
    int mu = 0;
    int kappa = 0;
    bool ke = false;
    bool one_ke = false;
    bool has_pm = false;
    std::optional<int> vertex_almost;  // least witness vertex, when vertex almost KE
    std::optional<Edge> edge_almost;   // least witness edge, when edge almost KE
    bool critical_vertex_almost = false;
    bool critical_edge_almost = false;
    int rho_v = 0;
    int rho_e = 0;
    std::vector<int> alpha_minus_vertex;       // alpha(G-v)
    std::vector<int> mu_minus_vertex;          // mu(G-v)
    std::vector<int> alpha_minus_edge;         // alpha(G-e), indexed like g.edges()
    std::vector<int> mu_minus_edge;            // mu(G-e)
    std::vector<bool> vertex_leaves_ke;        // per vertex: G-v is KE
    std::vector<bool> edge_leaves_ke;          // indexed like g.edges()
    std::vector<bool> alpha_critical_vertex;   // alpha(G-v) < alpha
    std::vector<bool> mu_critical_vertex;      // mu(G-v) < mu
    std::vector<bool> alpha_critical_edge;     // alpha(G-e) > alpha
    std::vector<bool> mu_critical_edge;        // mu(G-e) < mu
};

Classification classify(const Graph& g);

} // namespace keg
