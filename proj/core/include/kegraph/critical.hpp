#pragma once

#include <cstddef>
#include <vector>

#include "kegraph/graph.hpp"
#include "kegraph/independence.hpp"

namespace keg {

// d(X) = |X| - |N(X)| for an arbitrary vertex subset.
int difference(const Graph& g, const VertexSet& x);

// d(G) = max d(I) over independent sets I. Computed via a maximum matching in
// the bipartite double cover B (vertices u' and u'', edges u'v'' for uv in E):
// independent sets of B correspond to pairs (X, Y) with Y disjoint from N(X),
// and both-copy vertices X∩Y form an independent set of G with
// d(X∩Y) >= |X|+|Y| - n, which gives alpha(B) = n + d(G) = 2n - mu(B).
int critical_difference(const Graph& g);

// A set is critical when its difference attains d(G).
bool is_critical_set(const Graph& g, const VertexSet& a);

// All critical independent sets (independent I with d(I) = d(G)), sorted by
// ascending member sequence. Throws capacity_error past cap.
std::vector<VertexSet> enumerate_critical_independent_sets(const Graph& g,
                                                           std::size_t cap = enumeration_cap);

struct CriticalProfile {
    int d = 0;                              // critical difference
    int alpha_prime = 0;                    // size of a maximum critical independent set
    int epsilon = 0;                        // |ker|
    int beta = 0;                           // |diadem|
    VertexSet ker;                          // intersection of all critical independent sets
    VertexSet diadem;                       // union of all critical independent sets
    VertexSet witness_max_critical;         // least maximum critical independent set
    std::vector<VertexSet> family;          // all critical independent sets, sorted
    std::vector<VertexSet> max_critical;    // the maximum-size ones, sorted
    std::size_t family_size = 0;            // |family|
};

// Computes the whole profile from the enumerated family; cross-checks the
// matching-based d against the family and throws internal_error on mismatch.
CriticalProfile critical_profile(const Graph& g, std::size_t cap = enumeration_cap);

struct LarsonDecomposition {
    VertexSet a;   // least maximum critical independent set
    VertexSet x;   // N[a]
    bool trivial = false; // a empty (d = 0 with only the empty set critical)
};

// Splits V into X = N[A] and V - X for a maximum critical independent set A.
// Verifies alpha additivity, that G[X] has alpha + mu = |X|, that G[V - X]
// has critical difference 0 attained only by the empty set, and that every
// maximum critical independent set yields the same X; throws internal_error
// if any of these fails.
LarsonDecomposition larson_decomposition(const Graph& g, std::size_t cap = enumeration_cap);

} // namespace keg
