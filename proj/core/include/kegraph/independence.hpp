#pragma once

#include <cstddef>
#include <vector>

#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"

namespace keg {

// Default ceiling for set enumerations; exceeding it raises capacity_error.
inline constexpr std::size_t enumeration_cap = 1'000'000;

// Independence number, exact. Branch and bound: branches on a maximum-degree
// vertex, prunes with a greedy clique-cover bound.
int alpha(const Graph& g);

// All maximum independent sets, sorted by ascending member sequence.
std::vector<VertexSet> enumerate_maximum_independent_sets(const Graph& g,
                                                          std::size_t cap = enumeration_cap);

struct CoreXi {
    VertexSet core; // intersection of all maximum independent sets
    int xi = 0;     // |core|
};
CoreXi core_and_xi(const Graph& g, std::size_t cap = enumeration_cap);

bool is_alpha_critical_vertex(const Graph& g, int v); // alpha(G-v) < alpha(G)
bool is_alpha_critical_edge(const Graph& g, Edge e);  // alpha(G-e) > alpha(G)

} // namespace keg
