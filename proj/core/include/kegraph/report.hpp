#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kegraph/graph.hpp"
#include "kegraph/independence.hpp"

namespace keg {

// Single-graph summary: every invariant and classification flag, plus the
// graph itself so reports are self-contained and round-trippable.
struct InvariantReport {
    int n = 0;
    int m = 0;
    std::vector<Edge> edges;

    int alpha = 0;
    int mu = 0;
    int kappa = 0;
    int d = 0;
    int xi = 0;
    int epsilon = 0;
    int beta = 0;
    int alpha_prime = 0;
    int rho_v = 0;
    int rho_e = 0;
    std::size_t omega_count = 0;    // number of maximum independent sets
    std::size_t critical_count = 0; // number of critical independent sets

    std::vector<int> core;
    std::vector<int> ker;
    std::vector<int> diadem;
    std::vector<int> n_diadem; // N(diadem)
    std::vector<int> witness_max_critical;
    std::vector<int> mu_critical_not_alpha_critical; // vertices
    std::vector<int> larson_a;
    std::vector<int> larson_x;
    bool larson_trivial = false;

    bool ke = false;
    bool one_ke = false;
    bool has_perfect_matching = false;
    bool vertex_almost_ke = false;
    bool edge_almost_ke = false;
    bool critical_vertex_almost_ke = false;
    bool critical_edge_almost_ke = false;
    bool bipartite = false;
    bool almost_bipartite = false;
};

InvariantReport analyze(const Graph& g, std::size_t cap = enumeration_cap);

std::string report_json(const InvariantReport& r); // deterministic bytes

// Rebuilds the graph embedded in a report produced by report_json.
// Throws parse_error on malformed input.
Graph graph_from_report_json(const std::string& text);

} // namespace keg
