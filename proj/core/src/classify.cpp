#include "kegraph/classify.hpp"

#include "kegraph/independence.hpp"

namespace keg {

int koenig_deficiency(const Graph& g) {
    return g.vertex_count() - alpha(g) - matching_number(g);
}

bool is_ke(const Graph& g) { return koenig_deficiency(g) == 0; }

bool is_one_ke(const Graph& g) { return koenig_deficiency(g) == 1; }

std::optional<SupportWitness> is_supportive(const Graph& g, const VertexSet& a) {
    const VertexSet rest = ~a;
    for (int v : rest) {
        VertexSet from = rest;
        from.erase(v);
        if (auto m = matching_from_into(g, from, a))
            return SupportWitness{false, v, Edge{0, 0}, std::move(*m)};
    }
    for (const Edge& e : g.edges()) {
        if (a.contains(e.u) || a.contains(e.v)) continue;
        VertexSet from = rest;
        from.erase(e.u);
        from.erase(e.v);
        if (auto m = matching_from_into(g, from, a))
            return SupportWitness{true, -1, e, std::move(*m)};
    }
    return std::nullopt;
}

std::optional<int> vertex_almost_ke(const Graph& g) {
    if (is_ke(g)) return std::nullopt;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_ke(g.delete_vertex(v))) return v;
    return std::nullopt;
}

std::optional<Edge> edge_almost_ke(const Graph& g) {
    if (is_ke(g)) return std::nullopt;
    for (const Edge& e : g.edges())
        if (is_ke(g.delete_edge(e))) return e;
    return std::nullopt;
}

bool critical_vertex_almost_ke(const Graph& g) {
    if (is_ke(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_ke(g.delete_vertex(v))) return false;
    return true;
}

bool critical_edge_almost_ke(const Graph& g) {
    if (is_ke(g)) return false;
    for (const Edge& e : g.edges())
        if (!is_ke(g.delete_edge(e))) return false;
    return true;
}

int rho_v(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_ke(g.delete_vertex(v))) ++count;
    return count;
}

int rho_e(const Graph& g) {
    int count = 0;
    for (const Edge& e : g.edges())
        if (is_ke(g.delete_edge(e))) ++count;
    return count;
}

Classification classify(const Graph& g) {
    Classification c;
    c.n = g.vertex_count();
    c.m = g.edge_count();
    c.alpha = alpha(g);
    c.mu = matching_number(g);
    c.kappa = c.n - c.alpha - c.mu;
    c.ke = c.kappa == 0;
    c.one_ke = c.kappa == 1;
    c.has_pm = c.n % 2 == 0 && 2 * c.mu == c.n;

    c.alpha_minus_vertex.resize(c.n);
    c.mu_minus_vertex.resize(c.n);
    c.vertex_leaves_ke.resize(c.n);
    c.alpha_critical_vertex.resize(c.n);
    c.mu_critical_vertex.resize(c.n);
    for (int v = 0; v < c.n; ++v) {
        const Graph h = g.delete_vertex(v);
        const int ah = alpha(h);
        const int mh = matching_number(h);
        c.alpha_minus_vertex[v] = ah;
        c.mu_minus_vertex[v] = mh;
        c.vertex_leaves_ke[v] = ah + mh == c.n - 1;
        c.alpha_critical_vertex[v] = ah < c.alpha;
        c.mu_critical_vertex[v] = mh < c.mu;
        if (c.vertex_leaves_ke[v]) ++c.rho_v;
    }

    c.alpha_minus_edge.resize(c.m);
    c.mu_minus_edge.resize(c.m);
    c.edge_leaves_ke.resize(c.m);
    c.alpha_critical_edge.resize(c.m);
    c.mu_critical_edge.resize(c.m);
    for (int i = 0; i < c.m; ++i) {
        const Graph h = g.delete_edge(g.edges()[i]);
        const int ah = alpha(h);
        const int mh = matching_number(h);
        c.alpha_minus_edge[i] = ah;
        c.mu_minus_edge[i] = mh;
        c.edge_leaves_ke[i] = ah + mh == c.n;
        c.alpha_critical_edge[i] = ah > c.alpha;
        c.mu_critical_edge[i] = mh < c.mu;
        if (c.edge_leaves_ke[i]) ++c.rho_e;
    }

    if (!c.ke) {
        for (int v = 0; v < c.n && !c.vertex_almost; ++v)
            if (c.vertex_leaves_ke[v]) c.vertex_almost = v;
        for (int i = 0; i < c.m && !c.edge_almost; ++i)
            if (c.edge_leaves_ke[i]) c.edge_almost = g.edges()[i];
        c.critical_vertex_almost = c.n > 0 && c.rho_v == c.n;
        c.critical_edge_almost = c.rho_e == c.m;
    }
    return c;
}

} // namespace keg
