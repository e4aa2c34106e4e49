#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace keg {

// Subset of {0, ..., universe-1}, stored as a bitset. Value type; all set
// algebra returns new sets. Iteration yields members in ascending order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);

    static VertexSet full(int universe);
    static VertexSet from_indices(int universe, const std::vector<int>& members);

    int universe() const { return n_; }
    int size() const;
    bool empty() const;
    bool contains(int v) const;

    void add(int v);
    void erase(int v);

    VertexSet operator|(const VertexSet& o) const;
    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator-(const VertexSet& o) const;
    VertexSet operator~() const; // complement within the universe
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

    bool operator==(const VertexSet& o) const;
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // First member >= v, or universe() if none.
    int next(int v) const;

    std::vector<int> to_vector() const;

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() { v_ = s_->next(v_ + 1); return *this; }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
    private:
        const VertexSet* s_;
        int v_;
    };
    iterator begin() const { return iterator(this, next(0)); }
    iterator end() const { return iterator(this, n_); }

private:
    void check_universe(const VertexSet& o) const;
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Orders sets by their ascending member sequences ({0,2} < {0,3} < {1}).
bool lex_less(const VertexSet& a, const VertexSet& b);

// Undirected edge with endpoints normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(int a, int b); // normalizes; throws std::invalid_argument on a == b

struct InducedSubgraph;

// Immutable simple undirected graph on vertices {0, ..., n-1}.
// Mutating operations (deletions, induced subgraphs) return new graphs.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops or out-of-range endpoints.
    // Duplicate edges collapse.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; } // sorted lexicographically
    const VertexSet& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;
    bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    // Deletion results are reindexed to {0, ..., n-2}; surviving vertices keep
    // their relative order. induced_subgraph exposes the index map.
    Graph delete_vertex(int v) const;
    Graph delete_edge(Edge e) const; // throws std::invalid_argument if absent

    InducedSubgraph induced_subgraph(const VertexSet& keep) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Edge> edges_;
};

// Result of taking an induced subgraph: the reindexed graph plus the map back
// to the original vertex labels.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> orig; // orig[new_index] = old_index
};

// N(A): all vertices with a neighbor in A. May intersect A when A is not
// independent. N of the empty set is empty.
VertexSet neighborhood(const Graph& g, const VertexSet& a);

// N[A] = A union N(A).
VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);

bool is_independent(const Graph& g, const VertexSet& a);

bool is_bipartite(const Graph& g);

// True iff g contains exactly one simple odd cycle. Equivalent to: g is
// non-bipartite and deleting any single edge of one odd cycle makes it
// bipartite (a simple cycle cannot properly contain another cycle's edges,
// so an odd cycle surviving such a deletion would be a second one).
bool is_almost_bipartite(const Graph& g);

} // namespace keg
