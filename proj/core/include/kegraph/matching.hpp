#pragma once

#include <optional>
#include <vector>

#include "kegraph/graph.hpp"

namespace keg {

// A matching on the vertices of a fixed graph; unmatched vertices have no mate.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : mate_(n, -1) {}

    int universe() const { return static_cast<int>(mate_.size()); }
    int size() const;
    bool saturates(int v) const { return mate(v) != -1; }
    int mate(int v) const;
    std::vector<Edge> edges() const; // sorted lexicographically

    void link(int u, int v);

private:
    std::vector<int> mate_;
};

// Maximum cardinality matching via augmenting paths with blossom
// contraction. Deterministic: vertices and neighbors are scanned in
// ascending order, after a greedy initial matching.
Matching maximum_matching(const Graph& g);

int matching_number(const Graph& g); // mu

bool has_perfect_matching(const Graph& g);

// A matching that saturates every vertex of `from` using only edges between
// `from` and `into`, or nullopt if none exists (Hall's condition fails).
// Throws std::invalid_argument if the sets overlap.
std::optional<Matching> matching_from_into(const Graph& g, const VertexSet& from,
                                           const VertexSet& into);

bool is_mu_critical_vertex(const Graph& g, int v);  // mu(G-v) < mu(G)
bool is_mu_critical_edge(const Graph& g, Edge e);   // mu(G-e) < mu(G)

} // namespace keg
