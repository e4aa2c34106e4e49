#include "kegraph/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace keg {

int Matching::size() const {
    int c = 0;
    for (int v = 0; v < universe(); ++v)
        if (mate_[v] > v) ++c;
    return c;
}

int Matching::mate(int v) const {
    if (v < 0 || v >= universe()) throw std::invalid_argument("Matching::mate: out of range");
    return mate_[v];
}

std::vector<Edge> Matching::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < universe(); ++v)
        if (mate_[v] > v) out.push_back(Edge{v, mate_[v]});
    return out; // already sorted: ascending v with u < mate
}

void Matching::link(int u, int v) {
    if (u < 0 || v < 0 || u >= universe() || v >= universe() || u == v)
        throw std::invalid_argument("Matching::link: bad endpoints");
    if (mate_[u] != -1 || mate_[v] != -1)
        throw std::invalid_argument("Matching::link: endpoint already matched");
    mate_[u] = v;
    mate_[v] = u;
}

namespace {

// Edmonds' blossom algorithm, O(V^3). Searches an alternating tree from each
// unmatched root; odd cycles are contracted by remapping `base`.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.vertex_count()), mate_(n_, -1), p_(n_), base_(n_), used_(n_), flower_(n_) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1)
                for (int u : g_.neighbors(v))
                    if (mate_[u] == -1) {
                        mate_[v] = u;
                        mate_[u] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1) {
                int leaf = find_path(v);
                if (leaf != -1) augment(leaf);
            }
        return mate_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> mark(n_, 0);
        for (;;) {
            a = base_[a];
            mark[a] = 1;
            if (mate_[a] == -1) break;
            a = p_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (mark[b]) return b;
            b = p_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            flower_[base_[v]] = 1;
            flower_[base_[mate_[v]]] = 1;
            p_[v] = child;
            child = mate_[v];
            v = p_[mate_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(p_.begin(), p_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && p_[mate_[to]] != -1)) {
                    // v and to close an odd cycle: contract the blossom
                    int b = lca(v, to);
                    std::fill(flower_.begin(), flower_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i)
                        if (flower_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (mate_[to] == -1) return to; // augmenting path reaches a free vertex
                    used_[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = p_[v], next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, p_, base_;
    std::vector<char> used_, flower_;
};

} // namespace

Matching maximum_matching(const Graph& g) {
    std::vector<int> mate = Blossom(g).run();
    Matching m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) m.link(v, mate[v]);
    return m;
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool has_perfect_matching(const Graph& g) {
    return g.vertex_count() % 2 == 0 && 2 * matching_number(g) == g.vertex_count();
}

namespace {

bool kuhn_try(const Graph& g, const VertexSet& into, std::vector<int>& mate_of_into,
              std::vector<int>& mate_of_from, std::vector<char>& seen, int u) {
    for (int w : g.neighbors(u)) {
        if (!into.contains(w) || seen[w]) continue;
        seen[w] = 1;
        if (mate_of_into[w] == -1 ||
            kuhn_try(g, into, mate_of_into, mate_of_from, seen, mate_of_into[w])) {
            mate_of_into[w] = u;
            mate_of_from[u] = w;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Matching> matching_from_into(const Graph& g, const VertexSet& from,
                                           const VertexSet& into) {
    int n = g.vertex_count();
    if (from.universe() != n || into.universe() != n)
        throw std::invalid_argument("matching_from_into: set universe does not match graph");
    if (from.intersects(into))
        throw std::invalid_argument("matching_from_into: sets overlap");
    std::vector<int> mate_of_into(n, -1), mate_of_from(n, -1);
    std::vector<char> seen(n);
    for (int u : from) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!kuhn_try(g, into, mate_of_into, mate_of_from, seen, u)) return std::nullopt;
    }
    Matching m(n);
    for (int u : from)
        if (mate_of_from[u] != -1) m.link(u, mate_of_from[u]);
    return m;
}

bool is_mu_critical_vertex(const Graph& g, int v) {
    return matching_number(g.delete_vertex(v)) < matching_number(g);
}

bool is_mu_critical_edge(const Graph& g, Edge e) {
    return matching_number(g.delete_edge(e)) < matching_number(g);
}

} // namespace keg
