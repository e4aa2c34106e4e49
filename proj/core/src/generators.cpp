#include "kegraph/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace keg {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

Graph build(int n, std::vector<Edge> edges) { return Graph::from_edge_list(n, std::move(edges)); }

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return build(n, std::move(e));
}

Graph make_path(int n) {
    require(n >= 0, "path needs n >= 0");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return build(n, std::move(e));
}

Graph make_complete(int n) {
    require(n >= 0, "complete needs n >= 0");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return build(n, std::move(e));
}

Graph make_complete_bipartite(int a, int b) {
    require(a >= 0 && b >= 0, "complete_bipartite needs a, b >= 0");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return build(a + b, std::move(e));
}

Graph make_friendship(int k) {
    require(k >= 1, "friendship needs k >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        const int x = 2 * i + 1, y = 2 * i + 2;
        e.push_back({0, x});
        e.push_back({0, y});
        e.push_back({x, y});
    }
    return build(2 * k + 1, std::move(e));
}

} // namespace

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    std::vector<Edge> e = a.edges();
    for (const Edge& f : b.edges()) e.push_back({f.u + na, f.v + na});
    return build(na + b.vertex_count(), std::move(e));
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    Graph u = disjoint_union(a, b);
    std::vector<Edge> e = u.edges();
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < b.vertex_count(); ++j) e.push_back({i, na + j});
    return build(u.vertex_count(), std::move(e));
}

Graph family(const std::string& name, const std::vector<int>& params) {
    auto arity = [&](std::size_t k) {
        require(params.size() == k,
                "family '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "cycle") { arity(1); return make_cycle(params[0]); }
    if (name == "path") { arity(1); return make_path(params[0]); }
    if (name == "complete") { arity(1); return make_complete(params[0]); }
    if (name == "complete_bipartite") { arity(2); return make_complete_bipartite(params[0], params[1]); }
    if (name == "star") { arity(1); require(params[0] >= 0, "star needs k >= 0"); return make_complete_bipartite(1, params[0]); }
    if (name == "friendship") { arity(1); return make_friendship(params[0]); }
    if (name == "disjoint_union_pk1_complete") {
        arity(2);
        require(params[0] >= 0 && params[1] >= 0, "disjoint_union_pk1_complete needs p, q >= 0");
        return disjoint_union(build(params[0], {}), make_complete(params[1]));
    }
    if (name == "join_pk1_complete") {
        arity(2);
        require(params[0] >= 0 && params[1] >= 0, "join_pk1_complete needs p, q >= 0");
        return join(build(params[0], {}), make_complete(params[1]));
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
    return {"cycle", "path", "complete", "complete_bipartite", "star",
            "friendship", "disjoint_union_pk1_complete", "join_pk1_complete"};
}

namespace {

struct FixtureDef {
    int n;
    std::vector<Edge> edges;
};

const std::map<std::string, FixtureDef>& fixture_table() {
    static const std::map<std::string, FixtureDef> table = {
        {"fig1-G1", {7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {1, 6}, {2, 5}, {3, 5}, {2, 6}, {3, 6}}}},
        {"fig1-G2", {8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 7}, {1, 7}, {5, 6}, {2, 5}, {4, 6}}}},
        {"fig2-G1", {6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 4}, {2, 5}}}},
        {"fig2-G2", {7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {3, 5}, {5, 6}, {3, 6}}}},
        {"fig2-G3", {6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {3, 5}, {2, 5}}}},
        {"fig3-G1", {6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {1, 4}, {3, 5}}}},
        {"fig3-G2", {6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {3, 5}, {2, 5}}}},
        {"fig4-G1", {5, {{0, 1}, {1, 2}, {3, 4}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}}},
        {"fig4-G2", {6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 3}, {0, 4}, {1, 5}, {1, 4}, {2, 5}}}},
        {"fig5-G1", {8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 6}, {3, 7}}}},
        {"fig5-G2", {8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 5}, {2, 6}, {3, 7}}}},
        {"fig6-G1", {6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}}},
        {"fig6-G2", {7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}}}},
        {"fig7-G1", {9, {{0, 1}, {0, 5}, {1, 5}, {3, 5}, {6, 7}, {7, 8}, {2, 6}, {2, 3}, {3, 4}, {3, 7}, {4, 8}}}},
        {"fig7-G2", {9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 7}, {1, 7}, {1, 8}, {5, 6}, {2, 5}, {4, 6}}}},
        {"fig8-G1", {7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {1, 4}, {2, 6}, {2, 5}, {3, 6}}}},
        {"fig9-G1", {8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 6}, {3, 7}}}},
        {"fig9-G2", {7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 5}, {3, 6}, {4, 6}}}},
        {"fig10-G1", {8, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 6}, {3, 6}, {1, 3}, {3, 4}, {1, 5}, {1, 7}, {4, 7}, {2, 4}, {4, 5}, {6, 7}, {5, 6}, {2, 6}, {2, 5}, {5, 7}}}},
        {"fig10-G2", {5, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 4}}}},
        {"fig10-G3", {6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 5}}}},
    };
    return table;
}

} // namespace

Graph fixture(const std::string& name) {
    const auto& table = fixture_table();
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown fixture '" + name + "'");
    return Graph::from_edge_list(it->second.n, it->second.edges);
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [name, def] : fixture_table()) names.push_back(name);
    std::sort(names.begin(), names.end());
    return names;
}

LabeledGraphRange::LabeledGraphRange(int n) : n_(n) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("labeled enumeration supports 0 <= n <= 7");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs_.push_back({i, j});
    count_ = 1ULL << pairs_.size();
}

Graph LabeledGraphRange::at(std::uint64_t mask) const {
    if (mask >= count_) throw std::out_of_range("labeled graph mask out of range");
    std::vector<Edge> e;
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        if ((mask >> k) & 1ULL) e.push_back(pairs_[k]);
    return Graph::from_edge_list(n_, std::move(e));
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("erdos_renyi needs n >= 0");
    std::mt19937_64 rng(seed);
    const bool never = p <= 0.0;
    const bool always = p >= 1.0;
    std::uint64_t threshold = 0;
    if (!never && !always)
        threshold = static_cast<std::uint64_t>(static_cast<long double>(p) * 18446744073709551616.0L);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t draw = rng();
            if (always || (!never && draw < threshold)) e.push_back({i, j});
        }
    return Graph::from_edge_list(n, std::move(e));
}

} // namespace keg
