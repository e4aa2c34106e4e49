#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kegraph/graph.hpp"

namespace keg {

// Named families. Parameter arity and minimums depend on the family:
//   cycle(n>=3), path(n>=0), complete(n>=0), complete_bipartite(a,b>=0),
//   star(k>=0) = K_{1,k}, friendship(k>=1) = k triangles sharing one vertex,
//   disjoint_union_pk1_complete(p,q) = p isolated vertices plus a disjoint K_q,
//   join_pk1_complete(p,q) = p isolated vertices fully joined to a K_q.
// Throws std::invalid_argument on unknown name, wrong arity, or bad value.
Graph family(const std::string& name, const std::vector<int>& params);

std::vector<std::string> family_names();

Graph disjoint_union(const Graph& a, const Graph& b); // b's vertices shifted by |V(a)|
Graph join(const Graph& a, const Graph& b);           // disjoint union plus all cross edges

// Reconstructed figure graphs. Throws std::invalid_argument on unknown name.
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names(); // sorted

// All 2^(n(n-1)/2) labeled graphs on n vertices. Bit k of the mask selects
// the k-th vertex pair in ascending order (0,1),(0,2),...,(0,n-1),(1,2),...
// Throws std::invalid_argument for n < 0 or n > 7.
struct LabeledGraphRange {
    explicit LabeledGraphRange(int n);
    int n() const { return n_; }
    std::uint64_t count() const { return count_; }
    Graph at(std::uint64_t mask) const; // throws std::out_of_range past count
private:
    int n_ = 0;
    std::uint64_t count_ = 1;
    std::vector<Edge> pairs_;
};

// Seeded random graph: one std::mt19937_64(seed) draw per vertex pair in the
// same ascending pair order as LabeledGraphRange; the edge is included when
// draw < floor(p * 2^64) (never for p <= 0, always for p >= 1). A draw is
// consumed for every pair regardless of p, so the pair->draw alignment is
// independent of p.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

} // namespace keg
