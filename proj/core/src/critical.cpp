#include "kegraph/critical.hpp"

#include <algorithm>

#include "kegraph/matching.hpp"

namespace keg {

namespace {

// Recursion over vertex indices 0..n-1 shared by the max-difference pass and
// the collection pass. Adding one vertex raises |I| by one and |N(I)| by at
// least zero, so d can grow by at most one per undecided vertex; that gives
// the admissible bound d(I) + (n - k).
struct DifferenceSearch {
    const Graph& g;
    int n;
    int target;                   // collection pass: exact d to collect; max pass ignores
    bool collecting;
    std::size_t cap;
    int best = 0;                 // max pass result (empty set gives 0)
    std::vector<VertexSet> out;

    void run(int k, const VertexSet& chosen, const VertexSet& nbh) {
        const int d = static_cast<int>(chosen.size()) - static_cast<int>(nbh.size());
        if (!collecting) best = std::max(best, d);
        if (k == n) {
            if (collecting && d == target) {
                if (out.size() >= cap) throw capacity_error("critical independent set enumeration exceeded cap");
                out.push_back(chosen);
            }
            return;
        }
        const int optimistic = d + (n - k);
        if (collecting ? optimistic < target : optimistic <= best) return;
        if (!nbh.contains(k)) {
            VertexSet with = chosen;
            with.add(k);
            run(k + 1, with, nbh | g.neighbors(k));
        }
        run(k + 1, chosen, nbh);
    }
};

int max_difference_by_search(const Graph& g) {
    DifferenceSearch s{g, g.vertex_count(), 0, false, 0, 0, {}};
    s.run(0, VertexSet(g.vertex_count()), VertexSet(g.vertex_count()));
    return s.best;
}

std::vector<VertexSet> collect_at_difference(const Graph& g, int target, std::size_t cap) {
    DifferenceSearch s{g, g.vertex_count(), target, true, cap, 0, {}};
    s.run(0, VertexSet(g.vertex_count()), VertexSet(g.vertex_count()));
    std::sort(s.out.begin(), s.out.end(), lex_less);
    return s.out;
}

} // namespace

int difference(const Graph& g, const VertexSet& x) {
    return static_cast<int>(x.size()) - static_cast<int>(neighborhood(g, x).size());
}

int critical_difference(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> cover_edges;
    cover_edges.reserve(2 * g.edges().size());
    for (const Edge& e : g.edges()) {
        cover_edges.push_back(make_edge(e.u, n + e.v));
        cover_edges.push_back(make_edge(e.v, n + e.u));
    }
    const Graph cover = Graph::from_edge_list(2 * n, cover_edges);
    return n - matching_number(cover);
}

bool is_critical_set(const Graph& g, const VertexSet& a) {
    return difference(g, a) == critical_difference(g);
}

std::vector<VertexSet> enumerate_critical_independent_sets(const Graph& g, std::size_t cap) {
    return collect_at_difference(g, critical_difference(g), cap);
}

CriticalProfile critical_profile(const Graph& g, std::size_t cap) {
    const int d_matching = critical_difference(g);
    const int d_search = max_difference_by_search(g);
    if (d_matching != d_search)
        throw internal_error("critical difference mismatch between matching and subset search");

    CriticalProfile p;
    p.d = d_matching;
    p.family = collect_at_difference(g, p.d, cap);
    if (p.family.empty()) throw internal_error("empty critical family");

    p.family_size = p.family.size();
    p.ker = p.family.front();
    p.diadem = VertexSet(g.vertex_count());
    p.alpha_prime = 0;
    for (const auto& s : p.family) {
        p.ker &= s;
        p.diadem = p.diadem | s;
        p.alpha_prime = std::max(p.alpha_prime, static_cast<int>(s.size()));
    }
    for (const auto& s : p.family)
        if (static_cast<int>(s.size()) == p.alpha_prime) p.max_critical.push_back(s);
    p.witness_max_critical = p.max_critical.front();
    p.epsilon = static_cast<int>(p.ker.size());
    p.beta = static_cast<int>(p.diadem.size());
    return p;
}

LarsonDecomposition larson_decomposition(const Graph& g, std::size_t cap) {
    const CriticalProfile p = critical_profile(g, cap);
    LarsonDecomposition out;
    out.a = p.witness_max_critical;
    out.x = closed_neighborhood(g, out.a);
    out.trivial = out.a.empty();

    const auto inside = g.induced_subgraph(out.x);
    const auto outside = g.induced_subgraph(~out.x);
    const int a_in = alpha(inside.graph);
    const int a_out = alpha(outside.graph);
    if (alpha(g) != a_in + a_out)
        throw internal_error("decomposition breaks alpha additivity");
    if (a_in + matching_number(inside.graph) != inside.graph.vertex_count())
        throw internal_error("decomposition inside part is not Koenig-Egervary");
    const auto outside_family = enumerate_critical_independent_sets(outside.graph, cap);
    if (outside_family.size() != 1 || !outside_family.front().empty())
        throw internal_error("decomposition outside part has a nonempty critical set");
    for (const auto& other : p.max_critical)
        if (closed_neighborhood(g, other) != out.x)
            throw internal_error("decomposition X differs across maximum critical sets");
    return out;
}

} // namespace keg
