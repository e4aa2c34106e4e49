#include "kegraph/independence.hpp"

#include <algorithm>

namespace keg {

namespace {

// Upper bound on alpha(g[cand]): size of a greedy clique cover. Each clique
// can contribute at most one vertex to an independent set.
int clique_cover_bound(const Graph& g, const VertexSet& cand) {
    VertexSet rem = cand;
    int cliques = 0;
    while (!rem.empty()) {
        int v = rem.next(-1);
        rem.erase(v);
        VertexSet common = g.neighbors(v) & rem;
        while (!common.empty()) {
            int u = common.next(-1);
            rem.erase(u);
            common &= g.neighbors(u);
        }
        ++cliques;
    }
    return cliques;
}

// Branching vertex: maximum degree within cand, ties broken by least index.
int branch_vertex(const Graph& g, const VertexSet& cand) {
    int best_v = -1;
    int best_deg = -1;
    for (int v : cand) {
        const int deg = static_cast<int>((g.neighbors(v) & cand).size());
        if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    return best_v;
}

struct AlphaSolver {
    const Graph& g;
    int best = 0;

    void run(VertexSet cand, const VertexSet& chosen) {
        const int size = static_cast<int>(chosen.size());
        best = std::max(best, size);
        if (cand.empty()) return;
        if (size + clique_cover_bound(g, cand) <= best) return;
        const int v = branch_vertex(g, cand);
        VertexSet with = chosen;
        with.add(v);
        run(cand - g.neighbors(v) - VertexSet::from_indices(g.vertex_count(), {v}), with);
        cand.erase(v);
        run(cand, chosen);
    }
};

struct EnumSolver {
    const Graph& g;
    int target;
    std::size_t cap;
    std::vector<VertexSet> out;

    void run(VertexSet cand, const VertexSet& chosen) {
        const int size = static_cast<int>(chosen.size());
        if (size == target) {
            if (out.size() >= cap) throw capacity_error("maximum independent set enumeration exceeded cap");
            out.push_back(chosen);
            return;
        }
        if (cand.empty()) return;
        if (size + clique_cover_bound(g, cand) < target) return;
        const int v = branch_vertex(g, cand);
        VertexSet with = chosen;
        with.add(v);
        run(cand - g.neighbors(v) - VertexSet::from_indices(g.vertex_count(), {v}), with);
        cand.erase(v);
        run(cand, chosen);
    }
};

} // namespace

int alpha(const Graph& g) {
    AlphaSolver solver{g};
    solver.run(VertexSet::full(g.vertex_count()), VertexSet(g.vertex_count()));
    return solver.best;
}

std::vector<VertexSet> enumerate_maximum_independent_sets(const Graph& g, std::size_t cap) {
    EnumSolver solver{g, alpha(g), cap, {}};
    solver.run(VertexSet::full(g.vertex_count()), VertexSet(g.vertex_count()));
    std::sort(solver.out.begin(), solver.out.end(), lex_less);
    return solver.out;
}

CoreXi core_and_xi(const Graph& g, std::size_t cap) {
    const auto all = enumerate_maximum_independent_sets(g, cap);
    VertexSet core = VertexSet::full(g.vertex_count());
    for (const auto& s : all) core &= s;
    return CoreXi{core, static_cast<int>(core.size())};
}

bool is_alpha_critical_vertex(const Graph& g, int v) {
    return alpha(g.delete_vertex(v)) < alpha(g);
}

bool is_alpha_critical_edge(const Graph& g, Edge e) {
    return alpha(g.delete_edge(e)) > alpha(g);
}

} // namespace keg
