#include "kegraph/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "kegraph/generators.hpp"

namespace keg {

using ordered_json = nlohmann::ordered_json;

std::string status_name(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::violated: return "violated";
        case Status::not_applicable: return "not-applicable";
    }
    return "unknown";
}

const std::vector<TheoremInfo>& catalog() {
    static const std::vector<TheoremInfo> entries = {
        {"bounds-chain", "floor(n/2)+1 <= alpha+mu <= n <= alpha+2mu for nonempty graphs"},
        {"th715", "alpha+mu=n iff every maximum independent set S is critical and V-S matches into S"},
        {"Th1", "non-KE graphs: deficiency one iff every (equivalently some) maximum independent set is supportive"},
        {"cor1", "non-KE graphs: deficiency one iff one vertex deletion or one adjacent-pair deletion reaches alpha+mu=n"},
        {"th911", "non-KE graphs: deficiency one iff all maximum independent sets are supportive"},
        {"th12", "deficiency-one graphs: mu <= alpha+1; equality iff perfect matching; even order without one forces mu < alpha"},
        {"th3", "vertex almost KE and edge almost KE graphs have deficiency one"},
        {"th2", "vertex almost iff deficiency one with a vertex neither alpha- nor mu-critical; edge almost iff deficiency one with an alpha-critical non-mu-critical edge"},
        {"lem1", "single vertex or edge deletions move alpha and mu by at most one, in fixed directions"},
        {"cor25", "edge deletion preserves alpha+mu iff the edge is both alpha- and mu-critical or neither"},
        {"prop1_1", "KE graphs: every alpha-critical edge is mu-critical; the two sets coincide when bipartite"},
        {"lem84", "graphs with a unique odd cycle satisfy n-1 <= alpha+mu <= n"},
        {"cor3", "graphs with a unique odd cycle: deficiency one, vertex almost, and edge almost coincide"},
        {"th8", "if some vertex deletion reaches alpha+mu=n then the deficiency is at most one"},
        {"th10", "if some edge deletion reaches alpha+mu=n then the deficiency is at most one"},
        {"th17", "deficiency-one graphs: deleting v lands on KE iff v is neither alpha- nor mu-critical"},
        {"th11", "a matching from N(A) into independent A extends: mu = |N(A)| + mu(G - N[A]), and N(A) is mu-critical throughout"},
        {"prop11", "the core avoids N() of every critical independent set; N(diadem) holds only mu-critical non-alpha-critical vertices"},
        {"th333", "critical independent sets extend to maximum independent sets and to maximum critical ones; N(S) matches into S"},
        {"th100", "N[A] of a maximum critical independent set splits the graph: KE inside, only the empty set critical outside, alpha additive"},
        {"th444", "unions and intersections of critical independent sets are critical"},
        {"cor18", "deficiency-one graphs: rho_v <= n + d - xi - beta"},
        {"cor2", "deficiency-one graphs: rho_v <= n + d - xi - alpha_prime"},
        {"th9", "KE graphs: rho_v = n - xi + epsilon and rho_e <= m - xi + epsilon"},
        {"lem10", "critical vertex almost iff deficiency one, no perfect matching, xi = 0 and beta = 0; and then alpha = mu"},
        {"odd-order-remark", "critical vertex almost graphs have odd order n = 2*alpha + 1"},
        {"critical-edge-lemma", "in critical edge almost graphs every edge is alpha-critical"},
    };
    return entries;
}

bool is_catalog_id(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return true;
    return false;
}

Analysis::Analysis(Graph graph, std::size_t cap) : g(std::move(graph)) {
    cls = classify(g);
    omega = enumerate_maximum_independent_sets(g, cap);
    core.core = VertexSet::full(g.vertex_count());
    for (const auto& s : omega) core.core &= s;
    core.xi = core.core.size();
    crit = critical_profile(g, cap);
    bipartite = is_bipartite(g);
    almost_bip = is_almost_bipartite(g);
    if (!cls.ke) {
        omega_supportive.reserve(omega.size());
        for (const auto& s : omega)
            omega_supportive.push_back(is_supportive(g, s) ? 1 : 0);
    }
}

namespace {

ordered_json graph_json(const Graph& g) {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return ordered_json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

ordered_json set_json(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

TheoremResult holds(const std::string& id) { return {id, Status::holds, "", ""}; }

TheoremResult na(const std::string& id, const std::string& note) {
    return {id, Status::not_applicable, note, ""};
}

TheoremResult violated(const std::string& id, const Analysis& a, ordered_json detail) {
    ordered_json w{{"graph", graph_json(a.g)}, {"detail", std::move(detail)}};
    return {id, Status::violated, "", w.dump()};
}

// ---- individual checkers ---------------------------------------------------

TheoremResult check_bounds_chain(const Analysis& a) {
    const auto& c = a.cls;
    if (c.n == 0) return na("bounds-chain", "empty graph");
    const int am = c.alpha + c.mu;
    if (c.n / 2 + 1 <= am && am <= c.n && c.n <= c.alpha + 2 * c.mu) return holds("bounds-chain");
    return violated("bounds-chain", a,
                    {{"alpha", c.alpha}, {"mu", c.mu}, {"n", c.n}});
}

TheoremResult check_th715(const Analysis& a) {
    const auto& c = a.cls;
    bool some_non_critical = false;
    for (std::size_t i = 0; i < a.omega.size(); ++i) {
        const VertexSet& s = a.omega[i];
        const bool matched = matching_from_into(a.g, ~s, s).has_value();
        const bool critical = difference(a.g, s) == a.crit.d;
        if (c.ke && !(matched && critical))
            return violated("th715", a,
                            {{"set", set_json(s)},
                             {"matching_present", matched},
                             {"critical", critical},
                             {"expected", "KE graph: both required"}});
        if (!c.ke && matched)
            return violated("th715", a,
                            {{"set", set_json(s)},
                             {"matching_present", true},
                             {"expected", "non-KE graph: no maximum independent set admits the matching"}});
        if (!critical) some_non_critical = true;
    }
    if (!c.ke && !some_non_critical)
        return violated("th715", a,
                        {{"expected", "non-KE graph: some maximum independent set must be non-critical"}});
    return holds("th715");
}

TheoremResult check_th1(const Analysis& a) {
    const auto& c = a.cls;
    if (c.ke) return na("Th1", "graph is Koenig-Egervary, statement concerns non-KE graphs");
    bool any = false, all = true;
    for (char f : a.omega_supportive) {
        any = any || f;
        all = all && f;
    }
    if (c.one_ke && !all)
        return violated("Th1", a, {{"expected", "deficiency one forces every maximum independent set supportive"}});
    if (!c.one_ke && any)
        return violated("Th1", a, {{"expected", "a supportive maximum independent set forces deficiency one"}});
    return holds("Th1");
}

TheoremResult check_cor1(const Analysis& a) {
    const auto& c = a.cls;
    if (c.ke) return na("cor1", "graph is Koenig-Egervary, statement concerns non-KE graphs");
    bool pair_deletion = false;
    for (const Edge& e : a.g.edges()) {
        VertexSet keep = a.g.vertices();
        keep.erase(e.u);
        keep.erase(e.v);
        if (is_ke(a.g.induced_subgraph(keep).graph)) {
            pair_deletion = true;
            break;
        }
    }
    const bool rhs = c.rho_v >= 1 || pair_deletion;
    if (c.one_ke == rhs) return holds("cor1");
    return violated("cor1", a,
                    {{"deficiency_one", c.one_ke},
                     {"vertex_deletion_reaches_ke", c.rho_v >= 1},
                     {"adjacent_pair_deletion_reaches_ke", pair_deletion}});
}

TheoremResult check_th911(const Analysis& a) {
    const auto& c = a.cls;
    if (c.ke) return na("th911", "graph is Koenig-Egervary, statement concerns non-KE graphs");
    bool all = true;
    for (char f : a.omega_supportive) all = all && f;
    if (c.one_ke == all) return holds("th911");
    return violated("th911", a,
                    {{"deficiency_one", c.one_ke}, {"all_maximum_sets_supportive", all}});
}

TheoremResult check_th12(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.one_ke) return na("th12", "graph does not have deficiency one");
    const bool c1 = c.mu <= c.alpha + 1;
    const bool c2 = (c.mu == c.alpha + 1) == c.has_pm;
    const bool c3 = c.has_pm || c.n % 2 != 0 || c.mu < c.alpha;
    if (c1 && c2 && c3) return holds("th12");
    return violated("th12", a,
                    {{"alpha", c.alpha},
                     {"mu", c.mu},
                     {"perfect_matching", c.has_pm},
                     {"mu_le_alpha_plus_1", c1},
                     {"equality_iff_perfect_matching", c2},
                     {"even_no_pm_forces_mu_lt_alpha", c3}});
}

TheoremResult check_th3(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.vertex_almost && !c.edge_almost)
        return na("th3", "graph is neither vertex almost KE nor edge almost KE");
    if (c.one_ke) return holds("th3");
    return violated("th3", a, {{"kappa", c.kappa}});
}

TheoremResult check_th2(const Analysis& a) {
    const auto& c = a.cls;
    if (c.ke) return na("th2", "graph is Koenig-Egervary, statement concerns non-KE graphs");
    bool free_vertex = false;
    for (int v = 0; v < c.n; ++v)
        if (!c.alpha_critical_vertex[v] && !c.mu_critical_vertex[v]) free_vertex = true;
    bool special_edge = false;
    for (int i = 0; i < c.m; ++i)
        if (c.alpha_critical_edge[i] && !c.mu_critical_edge[i]) special_edge = true;
    const bool lhs_v = c.vertex_almost.has_value();
    const bool rhs_v = c.one_ke && free_vertex;
    const bool lhs_e = c.edge_almost.has_value();
    const bool rhs_e = c.one_ke && special_edge;
    if (lhs_v == rhs_v && lhs_e == rhs_e) return holds("th2");
    return violated("th2", a,
                    {{"vertex_almost", lhs_v},
                     {"deficiency_one_and_free_vertex", rhs_v},
                     {"edge_almost", lhs_e},
                     {"deficiency_one_and_alpha_critical_non_mu_critical_edge", rhs_e}});
}

TheoremResult check_lem1(const Analysis& a) {
    const auto& c = a.cls;
    if (c.n == 0) return na("lem1", "empty graph");
    for (int v = 0; v < c.n; ++v) {
        const int av = c.alpha_minus_vertex[v], mv = c.mu_minus_vertex[v];
        if (!(c.alpha - 1 <= av && av <= c.alpha && c.mu - 1 <= mv && mv <= c.mu))
            return violated("lem1", a,
                            {{"vertex", v}, {"alpha_after", av}, {"mu_after", mv},
                             {"alpha", c.alpha}, {"mu", c.mu}});
    }
    for (int i = 0; i < c.m; ++i) {
        const int ae = c.alpha_minus_edge[i], me = c.mu_minus_edge[i];
        if (!(c.alpha <= ae && ae <= c.alpha + 1 && c.mu - 1 <= me && me <= c.mu))
            return violated("lem1", a,
                            {{"edge", {a.g.edges()[i].u, a.g.edges()[i].v}},
                             {"alpha_after", ae}, {"mu_after", me},
                             {"alpha", c.alpha}, {"mu", c.mu}});
    }
    return holds("lem1");
}

TheoremResult check_cor25(const Analysis& a) {
    const auto& c = a.cls;
    if (c.m == 0) return na("cor25", "graph has no edges");
    for (int i = 0; i < c.m; ++i) {
        const bool preserved = c.alpha_minus_edge[i] + c.mu_minus_edge[i] == c.alpha + c.mu;
        const bool both = c.alpha_critical_edge[i] && c.mu_critical_edge[i];
        const bool neither = !c.alpha_critical_edge[i] && !c.mu_critical_edge[i];
        if (preserved != (both || neither))
            return violated("cor25", a,
                            {{"edge", {a.g.edges()[i].u, a.g.edges()[i].v}},
                             {"sum_preserved", preserved},
                             {"alpha_critical", static_cast<bool>(c.alpha_critical_edge[i])},
                             {"mu_critical", static_cast<bool>(c.mu_critical_edge[i])}});
    }
    return holds("cor25");
}

TheoremResult check_prop1_1(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.ke) return na("prop1_1", "graph is not Koenig-Egervary");
    if (c.m == 0) return na("prop1_1", "graph has no edges");
    for (int i = 0; i < c.m; ++i) {
        if (c.alpha_critical_edge[i] && !c.mu_critical_edge[i])
            return violated("prop1_1", a,
                            {{"edge", {a.g.edges()[i].u, a.g.edges()[i].v}},
                             {"expected", "alpha-critical edges of KE graphs are mu-critical"}});
        if (a.bipartite && c.mu_critical_edge[i] && !c.alpha_critical_edge[i])
            return violated("prop1_1", a,
                            {{"edge", {a.g.edges()[i].u, a.g.edges()[i].v}},
                             {"expected", "in bipartite graphs mu-critical edges are alpha-critical"}});
    }
    return holds("prop1_1");
}

TheoremResult check_lem84(const Analysis& a) {
    if (!a.almost_bip) return na("lem84", "graph does not have a unique odd cycle");
    const int am = a.cls.alpha + a.cls.mu;
    if (a.cls.n - 1 <= am && am <= a.cls.n) return holds("lem84");
    return violated("lem84", a, {{"alpha", a.cls.alpha}, {"mu", a.cls.mu}, {"n", a.cls.n}});
}

TheoremResult check_cor3(const Analysis& a) {
    if (!a.almost_bip) return na("cor3", "graph does not have a unique odd cycle");
    const bool p = a.cls.one_ke;
    const bool q = a.cls.vertex_almost.has_value();
    const bool r = a.cls.edge_almost.has_value();
    if (p == q && q == r) return holds("cor3");
    return violated("cor3", a,
                    {{"deficiency_one", p}, {"vertex_almost", q}, {"edge_almost", r}});
}

TheoremResult check_th8(const Analysis& a) {
    if (a.cls.rho_v < 1) return na("th8", "no vertex deletion reaches a KE graph");
    if (a.cls.kappa <= 1) return holds("th8");
    return violated("th8", a, {{"kappa", a.cls.kappa}, {"rho_v", a.cls.rho_v}});
}

TheoremResult check_th10(const Analysis& a) {
    if (a.cls.rho_e < 1) return na("th10", "no edge deletion reaches a KE graph");
    if (a.cls.kappa <= 1) return holds("th10");
    return violated("th10", a, {{"kappa", a.cls.kappa}, {"rho_e", a.cls.rho_e}});
}

TheoremResult check_th17(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.one_ke) return na("th17", "graph does not have deficiency one");
    for (int v = 0; v < c.n; ++v) {
        const bool lands = c.vertex_leaves_ke[v];
        const bool free_v = !c.alpha_critical_vertex[v] && !c.mu_critical_vertex[v];
        if (lands != free_v)
            return violated("th17", a,
                            {{"vertex", v},
                             {"deletion_lands_on_ke", lands},
                             {"alpha_critical", static_cast<bool>(c.alpha_critical_vertex[v])},
                             {"mu_critical", static_cast<bool>(c.mu_critical_vertex[v])}});
    }
    return holds("th17");
}

TheoremResult check_th11(const Analysis& a) {
    const int n = a.cls.n;
    if (n > 22) throw capacity_error("subset scan over independent sets needs n <= 22");
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : a.g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::unordered_map<std::uint32_t, int> mu_outside; // key: mask of V - N[A]
    bool exercised = false;
    const std::uint32_t limit = n >= 32 ? 0 : (1u << n);
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        bool independent = true;
        std::uint32_t nbh = 0;
        for (std::uint32_t rest = mask; rest && independent;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & mask) independent = false;
            nbh |= adj[v];
        }
        if (!independent) continue;
        VertexSet set_a(n), set_n(n);
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1u) set_a.add(v);
            if ((nbh >> v) & 1u) set_n.add(v);
        }
        const auto m1 = matching_from_into(a.g, set_n, set_a);
        if (!m1) continue;
        exercised = true;
        const std::uint32_t outside = ~(mask | nbh) & (limit - 1);
        auto it = mu_outside.find(outside);
        if (it == mu_outside.end()) {
            VertexSet keep(n);
            for (int v = 0; v < n; ++v)
                if ((outside >> v) & 1u) keep.add(v);
            it = mu_outside.emplace(outside, matching_number(a.g.induced_subgraph(keep).graph)).first;
        }
        const int predicted = static_cast<int>(set_n.size()) + it->second;
        bool neighborhood_mu_critical = true;
        for (int v : set_n)
            if (!a.cls.mu_critical_vertex[v]) neighborhood_mu_critical = false;
        if (predicted != a.cls.mu || !neighborhood_mu_critical)
            return violated("th11", a,
                            {{"independent_set", set_json(set_a)},
                             {"neighborhood", set_json(set_n)},
                             {"mu", a.cls.mu},
                             {"extended_matching_size", predicted},
                             {"neighborhood_all_mu_critical", neighborhood_mu_critical}});
    }
    if (!exercised)
        return na("th11", "no nonempty independent set admits a matching from its neighborhood into it");
    return holds("th11");
}

TheoremResult check_prop11(const Analysis& a) {
    for (const auto& s : a.crit.family) {
        if (a.core.core.intersects(neighborhood(a.g, s)))
            return violated("prop11", a,
                            {{"critical_set", set_json(s)},
                             {"core", set_json(a.core.core)},
                             {"expected", "core and N(critical set) are disjoint"}});
    }
    const VertexSet nd = neighborhood(a.g, a.crit.diadem);
    if (a.core.core.intersects(nd))
        return violated("prop11", a,
                        {{"n_diadem", set_json(nd)},
                         {"core", set_json(a.core.core)},
                         {"expected", "core and N(diadem) are disjoint"}});
    for (int v : nd)
        if (!a.cls.mu_critical_vertex[v] || a.cls.alpha_critical_vertex[v])
            return violated("prop11", a,
                            {{"vertex", v},
                             {"mu_critical", static_cast<bool>(a.cls.mu_critical_vertex[v])},
                             {"alpha_critical", static_cast<bool>(a.cls.alpha_critical_vertex[v])},
                             {"expected", "N(diadem) holds only mu-critical non-alpha-critical vertices"}});
    return holds("prop11");
}

TheoremResult check_th333(const Analysis& a) {
    for (const auto& s : a.crit.family) {
        bool in_maximum = false;
        for (const auto& w : a.omega)
            if (s.is_subset_of(w)) { in_maximum = true; break; }
        if (!in_maximum)
            return violated("th333", a,
                            {{"critical_set", set_json(s)},
                             {"expected", "contained in some maximum independent set"}});
        bool in_max_critical = false;
        for (const auto& w : a.crit.max_critical)
            if (s.is_subset_of(w)) { in_max_critical = true; break; }
        if (!in_max_critical)
            return violated("th333", a,
                            {{"critical_set", set_json(s)},
                             {"expected", "contained in some maximum critical independent set"}});
        if (!matching_from_into(a.g, neighborhood(a.g, s), s))
            return violated("th333", a,
                            {{"critical_set", set_json(s)},
                             {"expected", "a matching from N(S) into S"}});
    }
    return holds("th333");
}

TheoremResult check_th100(const Analysis& a) {
    const VertexSet& set_a = a.crit.witness_max_critical;
    const VertexSet x = closed_neighborhood(a.g, set_a);
    const auto inside = a.g.induced_subgraph(x);
    const auto outside = a.g.induced_subgraph(~x);
    const int alpha_in = alpha(inside.graph);
    const int alpha_out = alpha(outside.graph);
    ordered_json base{{"A", set_json(set_a)}, {"X", set_json(x)}};
    if (a.cls.alpha != alpha_in + alpha_out) {
        base["expected"] = "alpha additive across the split";
        base["alpha"] = a.cls.alpha;
        base["alpha_inside"] = alpha_in;
        base["alpha_outside"] = alpha_out;
        return violated("th100", a, base);
    }
    if (alpha_in + matching_number(inside.graph) != inside.graph.vertex_count()) {
        base["expected"] = "G[X] is Koenig-Egervary";
        return violated("th100", a, base);
    }
    const auto outside_family = enumerate_critical_independent_sets(outside.graph);
    if (outside_family.size() != 1 || !outside_family.front().empty()) {
        base["expected"] = "only the empty set is critical outside X";
        return violated("th100", a, base);
    }
    for (const auto& other : a.crit.max_critical)
        if (closed_neighborhood(a.g, other) != x) {
            base["expected"] = "N[A] identical for every maximum critical independent set";
            base["other_A"] = set_json(other);
            return violated("th100", a, base);
        }
    return holds("th100");
}

TheoremResult check_th444(const Analysis& a) {
    const std::size_t limit = std::min<std::size_t>(a.crit.family.size(), 100);
    for (std::size_t i = 0; i < limit; ++i)
        for (std::size_t j = i + 1; j < limit; ++j) {
            const VertexSet u = a.crit.family[i] | a.crit.family[j];
            const VertexSet w = a.crit.family[i] & a.crit.family[j];
            const bool u_ok = difference(a.g, u) == a.crit.d;
            const bool w_ok = difference(a.g, w) == a.crit.d;
            if (!u_ok || !w_ok)
                return violated("th444", a,
                                {{"A", set_json(a.crit.family[i])},
                                 {"B", set_json(a.crit.family[j])},
                                 {"union_critical", u_ok},
                                 {"intersection_critical", w_ok}});
        }
    return holds("th444");
}

TheoremResult check_cor18(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.one_ke) return na("cor18", "graph does not have deficiency one");
    const int bound = c.n + a.crit.d - a.core.xi - a.crit.beta;
    if (c.rho_v <= bound) return holds("cor18");
    return violated("cor18", a,
                    {{"rho_v", c.rho_v}, {"n", c.n}, {"d", a.crit.d},
                     {"xi", a.core.xi}, {"beta", a.crit.beta}});
}

TheoremResult check_cor2(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.one_ke) return na("cor2", "graph does not have deficiency one");
    const int bound = c.n + a.crit.d - a.core.xi - a.crit.alpha_prime;
    if (c.rho_v <= bound) return holds("cor2");
    return violated("cor2", a,
                    {{"rho_v", c.rho_v}, {"n", c.n}, {"d", a.crit.d},
                     {"xi", a.core.xi}, {"alpha_prime", a.crit.alpha_prime}});
}

TheoremResult check_th9(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.ke) return na("th9", "graph is not Koenig-Egervary");
    const bool v_ok = c.rho_v == c.n - a.core.xi + a.crit.epsilon;
    const bool e_ok = c.rho_e <= c.m - a.core.xi + a.crit.epsilon;
    if (v_ok && e_ok) return holds("th9");
    return violated("th9", a,
                    {{"rho_v", c.rho_v}, {"rho_e", c.rho_e}, {"n", c.n}, {"m", c.m},
                     {"xi", a.core.xi}, {"epsilon", a.crit.epsilon},
                     {"vertex_equality", v_ok}, {"edge_bound", e_ok}});
}

TheoremResult check_lem10(const Analysis& a) {
    const auto& c = a.cls;
    const bool lhs = c.critical_vertex_almost;
    const bool rhs = c.one_ke && !c.has_pm && a.core.xi == 0 && a.crit.beta == 0;
    if (lhs != rhs)
        return violated("lem10", a,
                        {{"critical_vertex_almost", lhs},
                         {"deficiency_one", c.one_ke},
                         {"perfect_matching", c.has_pm},
                         {"xi", a.core.xi},
                         {"beta", a.crit.beta}});
    if (lhs && c.alpha != c.mu)
        return violated("lem10", a,
                        {{"alpha", c.alpha}, {"mu", c.mu},
                         {"expected", "critical vertex almost KE forces alpha = mu"}});
    return holds("lem10");
}

TheoremResult check_odd_order(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.critical_vertex_almost)
        return na("odd-order-remark", "graph is not critical vertex almost KE");
    if (c.n % 2 == 1 && c.n == 2 * c.alpha + 1) return holds("odd-order-remark");
    return violated("odd-order-remark", a, {{"n", c.n}, {"alpha", c.alpha}});
}

TheoremResult check_critical_edge_lemma(const Analysis& a) {
    const auto& c = a.cls;
    if (!c.critical_edge_almost)
        return na("critical-edge-lemma", "graph is not critical edge almost KE");
    for (int i = 0; i < c.m; ++i)
        if (!c.alpha_critical_edge[i])
            return violated("critical-edge-lemma", a,
                            {{"edge", {a.g.edges()[i].u, a.g.edges()[i].v}},
                             {"expected", "every edge alpha-critical"}});
    return holds("critical-edge-lemma");
}

} // namespace

TheoremResult check(const std::string& id, const Analysis& a) {
    if (id == "bounds-chain") return check_bounds_chain(a);
    if (id == "th715") return check_th715(a);
    if (id == "Th1") return check_th1(a);
    if (id == "cor1") return check_cor1(a);
    if (id == "th911") return check_th911(a);
    if (id == "th12") return check_th12(a);
    if (id == "th3") return check_th3(a);
    if (id == "th2") return check_th2(a);
    if (id == "lem1") return check_lem1(a);
    if (id == "cor25") return check_cor25(a);
    if (id == "prop1_1") return check_prop1_1(a);
    if (id == "lem84") return check_lem84(a);
    if (id == "cor3") return check_cor3(a);
    if (id == "th8") return check_th8(a);
    if (id == "th10") return check_th10(a);
    if (id == "th17") return check_th17(a);
    if (id == "th11") return check_th11(a);
    if (id == "prop11") return check_prop11(a);
    if (id == "th333") return check_th333(a);
    if (id == "th100") return check_th100(a);
    if (id == "th444") return check_th444(a);
    if (id == "cor18") return check_cor18(a);
    if (id == "cor2") return check_cor2(a);
    if (id == "th9") return check_th9(a);
    if (id == "lem10") return check_lem10(a);
    if (id == "odd-order-remark") return check_odd_order(a);
    if (id == "critical-edge-lemma") return check_critical_edge_lemma(a);
    throw std::invalid_argument("unknown theorem id '" + id + "'");
}

TheoremResult check(const std::string& id, const Graph& g) {
    return check(id, Analysis(g));
}

std::vector<TheoremResult> check_all(const Analysis& a) {
    std::vector<TheoremResult> out;
    out.reserve(catalog().size());
    for (const auto& info : catalog()) out.push_back(check(info.id, a));
    return out;
}

std::vector<TheoremResult> check_all(const Graph& g) {
    return check_all(Analysis(g));
}

// ---- corpora ---------------------------------------------------------------

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

bool family_is_two_parameter(const std::string& name) {
    return name == "complete_bipartite" || name == "disjoint_union_pk1_complete" ||
           name == "join_pk1_complete";
}

} // namespace

std::string CorpusDescriptor::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::exhaustive:
            os << "exhaustive:n<=" << exhaustive_max_n;
            break;
        case Kind::random: {
            os << "random:n=" << random_n << ",p=";
            for (std::size_t i = 0; i < random_p.size(); ++i)
                os << (i ? "|" : "") << format_double(random_p[i]);
            os << ",count=" << random_count << ",seed=" << random_seed;
            break;
        }
        case Kind::family: {
            os << "family:" << family_name << ":k=";
            for (std::size_t i = 0; i < family_values.size(); ++i)
                os << (i ? "|" : "") << family_values[i];
            if (family_is_two_parameter(family_name)) os << ",offset=" << family_second_offset;
            break;
        }
        case Kind::fixtures: {
            os << "fixtures:";
            if (fixture_list.empty()) {
                os << "all";
            } else {
                for (std::size_t i = 0; i < fixture_list.size(); ++i)
                    os << (i ? "|" : "") << fixture_list[i];
            }
            break;
        }
    }
    return os.str();
}

std::vector<std::pair<std::string, Graph>> corpus_graphs(const CorpusDescriptor& d) {
    std::vector<std::pair<std::string, Graph>> out;
    switch (d.kind) {
        case CorpusDescriptor::Kind::exhaustive: {
            if (d.exhaustive_max_n < 0 || d.exhaustive_max_n > 7)
                throw std::invalid_argument("exhaustive corpus needs 0 <= n <= 7");
            for (int n = 0; n <= d.exhaustive_max_n; ++n) {
                LabeledGraphRange range(n);
                for (std::uint64_t mask = 0; mask < range.count(); ++mask) {
                    std::ostringstream id;
                    id << "exh:n=" << n << ":mask=" << mask;
                    out.emplace_back(id.str(), range.at(mask));
                }
            }
            break;
        }
        case CorpusDescriptor::Kind::random: {
            if (d.random_n < 0 || d.random_count < 0 || d.random_p.empty())
                throw std::invalid_argument("random corpus needs n >= 0, count >= 0 and at least one p");
            std::uint64_t j = 0;
            for (double p : d.random_p)
                for (int i = 0; i < d.random_count; ++i, ++j) {
                    const std::uint64_t seed = d.random_seed + j;
                    std::ostringstream id;
                    id << "rnd:j=" << j << ":n=" << d.random_n << ":p=" << format_double(p)
                       << ":seed=" << seed;
                    out.emplace_back(id.str(), erdos_renyi(d.random_n, p, seed));
                }
            break;
        }
        case CorpusDescriptor::Kind::family: {
            for (int k : d.family_values) {
                std::vector<int> params{k};
                std::ostringstream id;
                id << "fam:" << d.family_name << ":k=" << k;
                if (family_is_two_parameter(d.family_name)) {
                    params.push_back(k + d.family_second_offset);
                    id << ":q=" << k + d.family_second_offset;
                }
                out.emplace_back(id.str(), family(d.family_name, params));
            }
            break;
        }
        case CorpusDescriptor::Kind::fixtures: {
            std::vector<std::string> names =
                d.fixture_list.empty() ? fixture_names() : d.fixture_list;
            for (const auto& name : names) out.emplace_back("fix:" + name, fixture(name));
            break;
        }
    }
    return out;
}

CorpusReport verify_corpus(const CorpusDescriptor& d, std::vector<std::string> ids, int jobs,
                           std::size_t cap) {
    if (ids.empty()) {
        for (const auto& info : catalog()) ids.push_back(info.id);
    } else {
        for (const auto& id : ids)
            if (!is_catalog_id(id)) throw std::invalid_argument("unknown theorem id '" + id + "'");
        // canonical catalog order, duplicates removed
        std::vector<std::string> ordered;
        for (const auto& info : catalog())
            if (std::find(ids.begin(), ids.end(), info.id) != ids.end()) ordered.push_back(info.id);
        ids = std::move(ordered);
    }

    const auto graphs = corpus_graphs(d);
    struct GraphOutcome {
        std::vector<Status> statuses;                              // per checked id
        std::vector<std::pair<std::string, std::string>> violated; // (id, witness)
    };
    std::vector<GraphOutcome> results(graphs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    const auto worker = [&]() {
        while (!stop.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            try {
                Analysis a(graphs[i].second, cap);
                GraphOutcome out;
                out.statuses.reserve(ids.size());
                for (const auto& id : ids) {
                    TheoremResult r = check(id, a);
                    out.statuses.push_back(r.status);
                    if (r.status == Status::violated)
                        out.violated.emplace_back(r.id, std::move(r.witness_json));
                }
                results[i] = std::move(out);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                stop.store(true);
                return;
            }
        }
    };

    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    CorpusReport rep;
    rep.descriptor = d.to_string();
    rep.theorems = ids;
    rep.corpus_size = graphs.size();
    for (const auto& id : ids) rep.tallies.push_back({id, 0, 0, 0});
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t k = 0; k < ids.size(); ++k) {
            switch (results[i].statuses[k]) {
                case Status::holds: ++rep.tallies[k].holds; break;
                case Status::violated: ++rep.tallies[k].violated; break;
                case Status::not_applicable: ++rep.tallies[k].not_applicable; break;
            }
        }
        for (auto& [id, witness] : results[i].violated)
            rep.violations.push_back({id, graphs[i].first, std::move(witness)});
    }
    return rep;
}

std::string corpus_report_json(const CorpusReport& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "corpus-report";
    j["descriptor"] = r.descriptor;
    j["corpus_size"] = r.corpus_size;
    j["theorems"] = r.theorems;
    ordered_json tallies = ordered_json::array();
    for (const auto& t : r.tallies)
        tallies.push_back({{"id", t.id},
                           {"holds", t.holds},
                           {"violated", t.violated},
                           {"not_applicable", t.not_applicable}});
    j["tallies"] = std::move(tallies);
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"theorem", v.theorem},
                              {"graph_id", v.graph_id},
                              {"witness", ordered_json::parse(v.witness_json)}});
    j["violations"] = std::move(violations);
    return j.dump(2) + "\n";
}

} // namespace keg
