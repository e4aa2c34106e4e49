#include "kegraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace keg {

namespace {
constexpr int kWordBits = 64;
int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
} // namespace

VertexSet::VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) add(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int i = 0; i < word_count(universe); ++i) s.w_[i] = ~0ULL;
    if (universe % kWordBits != 0 && universe > 0)
        s.w_.back() &= (1ULL << (universe % kWordBits)) - 1;
    return s;
}

VertexSet VertexSet::from_indices(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

int VertexSet::size() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : w_)
        if (w != 0) return false;
    return true;
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= n_) return false;
    return (w_[v / kWordBits] >> (v % kWordBits)) & 1ULL;
}

void VertexSet::add(int v) {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("VertexSet::add: vertex " + std::to_string(v) +
                                    " outside universe " + std::to_string(n_));
    w_[v / kWordBits] |= 1ULL << (v % kWordBits);
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= n_) return;
    w_[v / kWordBits] &= ~(1ULL << (v % kWordBits));
}

void VertexSet::check_universe(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    check_universe(o);
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    check_universe(o);
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
    check_universe(o);
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
}

VertexSet VertexSet::operator~() const {
    return full(n_) - *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool VertexSet::operator==(const VertexSet& o) const {
    return n_ == o.n_ && w_ == o.w_;
}

int VertexSet::next(int v) const {
    if (v < 0) v = 0;
    if (v >= n_) return n_;
    int wi = v / kWordBits;
    std::uint64_t w = w_[wi] >> (v % kWordBits);
    if (w != 0) return v + std::countr_zero(w);
    for (++wi; wi < static_cast<int>(w_.size()); ++wi)
        if (w_[wi] != 0) return wi * kWordBits + std::countr_zero(w_[wi]);
    return n_;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.next(0), y = b.next(0);
    while (x < a.universe() && y < b.universe()) {
        if (x != y) return x < y;
        x = a.next(x + 1);
        y = b.next(y + 1);
    }
    return x >= a.universe() && y < b.universe();
}

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge endpoints coincide: " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                        " " + std::to_string(e.v));
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        norm.push_back(make_edge(e.u, e.v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    for (const Edge& e : norm) {
        g.adj_[e.u].add(e.v);
        g.adj_[e.v].add(e.u);
    }
    g.edges_ = std::move(norm);
    return g;
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

int Graph::degree(int v) const { return neighbors(v).size(); }

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range");
    return adj_[u].contains(v);
}

InducedSubgraph Graph::induced_subgraph(const VertexSet& keep) const {
    if (keep.universe() != n_)
        throw std::invalid_argument("induced_subgraph: set universe does not match graph");
    InducedSubgraph out;
    out.orig = keep.to_vector();
    std::vector<int> newidx(n_, -1);
    for (std::size_t i = 0; i < out.orig.size(); ++i) newidx[out.orig[i]] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (const Edge& e : edges_)
        if (newidx[e.u] >= 0 && newidx[e.v] >= 0)
            sub.push_back(make_edge(newidx[e.u], newidx[e.v]));
    out.graph = from_edge_list(static_cast<int>(out.orig.size()), sub);
    return out;
}

Graph Graph::delete_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("delete_vertex: vertex out of range");
    VertexSet keep = VertexSet::full(n_);
    keep.erase(v);
    return induced_subgraph(keep).graph;
}

Graph Graph::delete_edge(Edge e) const {
    e = make_edge(e.u, e.v);
    if (e.u < 0 || e.v >= n_ || !adjacent(e.u, e.v))
        throw std::invalid_argument("delete_edge: edge not present");
    std::vector<Edge> rest;
    rest.reserve(edges_.size() - 1);
    for (const Edge& f : edges_)
        if (!(f == e)) rest.push_back(f);
    return from_edge_list(n_, rest);
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.vertex_count())
        throw std::invalid_argument("neighborhood: set universe does not match graph");
    VertexSet r(g.vertex_count());
    for (int v : a) r = r | g.neighbors(v);
    return r;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
    return a | neighborhood(g, a);
}

bool is_independent(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.vertex_count())
        throw std::invalid_argument("is_independent: set universe does not match graph");
    for (int v : a)
        if (g.neighbors(v).intersects(a)) return false;
    return true;
}

namespace {

// Two-colors each component; on failure returns an odd cycle through the
// first conflicting edge (paths to the BFS-tree LCA plus that edge).
bool two_color(const Graph& g, std::vector<Edge>* odd_cycle) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                } else if (color[w] == color[u]) {
                    if (odd_cycle) {
                        std::vector<int> pu, pw;
                        int a = u, b = w;
                        while (depth[a] > depth[b]) { pu.push_back(a); a = parent[a]; }
                        while (depth[b] > depth[a]) { pw.push_back(b); b = parent[b]; }
                        while (a != b) {
                            pu.push_back(a); a = parent[a];
                            pw.push_back(b); b = parent[b];
                        }
                        std::vector<int> cyc(pu);
                        cyc.push_back(a);
                        for (auto it = pw.rbegin(); it != pw.rend(); ++it) cyc.push_back(*it);
                        odd_cycle->clear();
                        for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
                            odd_cycle->push_back(make_edge(cyc[i], cyc[i + 1]));
                        odd_cycle->push_back(make_edge(u, w));
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

bool is_bipartite(const Graph& g) { return two_color(g, nullptr); }

bool is_almost_bipartite(const Graph& g) {
    std::vector<Edge> cycle;
    if (two_color(g, &cycle)) return false; // no odd cycle at all
    for (const Edge& e : cycle)
        if (!is_bipartite(g.delete_edge(e))) return false; // a second odd cycle survives
    return true;
}

} // namespace keg
