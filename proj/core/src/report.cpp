#include "kegraph/report.hpp"

#include <json.hpp>

#include "kegraph/classify.hpp"
#include "kegraph/critical.hpp"
#include "kegraph/errors.hpp"
#include "kegraph/theorems.hpp"

namespace keg {

using ordered_json = nlohmann::ordered_json;

InvariantReport analyze(const Graph& g, std::size_t cap) {
    Analysis a(g, cap);
    InvariantReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.edges = g.edges();

    r.alpha = a.cls.alpha;
    r.mu = a.cls.mu;
    r.kappa = a.cls.kappa;
    r.d = a.crit.d;
    r.xi = a.core.xi;
    r.epsilon = a.crit.epsilon;
    r.beta = a.crit.beta;
    r.alpha_prime = a.crit.alpha_prime;
    r.rho_v = a.cls.rho_v;
    r.rho_e = a.cls.rho_e;
    r.omega_count = a.omega.size();
    r.critical_count = a.crit.family_size;

    r.core = a.core.core.to_vector();
    r.ker = a.crit.ker.to_vector();
    r.diadem = a.crit.diadem.to_vector();
    r.n_diadem = neighborhood(g, a.crit.diadem).to_vector();
    r.witness_max_critical = a.crit.witness_max_critical.to_vector();
    for (int v = 0; v < r.n; ++v)
        if (a.cls.mu_critical_vertex[v] && !a.cls.alpha_critical_vertex[v])
            r.mu_critical_not_alpha_critical.push_back(v);

    const LarsonDecomposition larson = larson_decomposition(g, cap);
    r.larson_a = larson.a.to_vector();
    r.larson_x = larson.x.to_vector();
    r.larson_trivial = larson.trivial;

    r.ke = a.cls.ke;
    r.one_ke = a.cls.one_ke;
    r.has_perfect_matching = a.cls.has_pm;
    r.vertex_almost_ke = a.cls.vertex_almost.has_value();
    r.edge_almost_ke = a.cls.edge_almost.has_value();
    r.critical_vertex_almost_ke = a.cls.critical_vertex_almost;
    r.critical_edge_almost_ke = a.cls.critical_edge_almost;
    r.bipartite = a.bipartite;
    r.almost_bipartite = a.almost_bip;
    return r;
}

namespace {

ordered_json int_array(const std::vector<int>& v) {
    ordered_json arr = ordered_json::array();
    for (int x : v) arr.push_back(x);
    return arr;
}

} // namespace

std::string report_json(const InvariantReport& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "invariant-report";

    ordered_json edges = ordered_json::array();
    for (const Edge& e : r.edges) edges.push_back({e.u, e.v});
    j["graph"] = {{"n", r.n}, {"m", r.m}, {"edges", std::move(edges)}};

    j["invariants"] = {{"alpha", r.alpha},
                       {"mu", r.mu},
                       {"kappa", r.kappa},
                       {"d", r.d},
                       {"xi", r.xi},
                       {"epsilon", r.epsilon},
                       {"beta", r.beta},
                       {"alpha_prime", r.alpha_prime},
                       {"rho_v", r.rho_v},
                       {"rho_e", r.rho_e},
                       {"omega_count", r.omega_count},
                       {"critical_count", r.critical_count}};

    j["sets"] = {{"core", int_array(r.core)},
                 {"ker", int_array(r.ker)},
                 {"diadem", int_array(r.diadem)},
                 {"n_diadem", int_array(r.n_diadem)},
                 {"witness_max_critical", int_array(r.witness_max_critical)},
                 {"mu_critical_not_alpha_critical", int_array(r.mu_critical_not_alpha_critical)},
                 {"larson_A", int_array(r.larson_a)},
                 {"larson_X", int_array(r.larson_x)}};

    j["classification"] = {{"ke", r.ke},
                           {"one_ke", r.one_ke},
                           {"has_perfect_matching", r.has_perfect_matching},
                           {"vertex_almost_ke", r.vertex_almost_ke},
                           {"edge_almost_ke", r.edge_almost_ke},
                           {"critical_vertex_almost_ke", r.critical_vertex_almost_ke},
                           {"critical_edge_almost_ke", r.critical_edge_almost_ke},
                           {"bipartite", r.bipartite},
                           {"almost_bipartite", r.almost_bipartite},
                           {"larson_trivial", r.larson_trivial}};
    return j.dump(2) + "\n";
}

Graph graph_from_report_json(const std::string& text) {
    try {
        const ordered_json j = ordered_json::parse(text);
        const auto& graph = j.at("graph");
        const int n = graph.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : graph.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw parse_error("edge entry is not a pair");
            edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
        }
        return Graph::from_edge_list(n, edges);
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& ex) {
        throw parse_error(std::string("malformed report: ") + ex.what());
    }
}

} // namespace keg
