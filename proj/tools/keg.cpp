// keg: graph invariants, classification, theorem verification, and
// extremal-instance search over small-graph corpora.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kegraph/classify.hpp"
#include "kegraph/errors.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/io.hpp"
#include "kegraph/report.hpp"
#include "kegraph/theorems.hpp"

namespace {

using keg::CorpusDescriptor;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_violation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
}

keg::GraphFormat parse_format(const std::string& name) {
    if (name == "edge-list") return keg::GraphFormat::edge_list;
    if (name == "graph6") return keg::GraphFormat::graph6;
    if (name == "dimacs") return keg::GraphFormat::dimacs;
    throw UsageError("unknown format '" + name + "'");
}

// Shared corpus flags for `verify` and `search`.
struct CorpusFlags {
    int exhaustive_n = -1;
    std::string random_spec;
    std::optional<std::uint64_t> seed_flag;
    std::string family_name;
    int family_min = -1;
    int family_max = -1;
    bool odd_only = false;
    bool even_only = false;
    int second_offset = 1;
    std::vector<std::string> fixtures;
    bool all_fixtures = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--exhaustive-n", exhaustive_n,
                        "all labeled graphs on 0..N vertices (N <= 7)");
        cmd->add_option("--random", random_spec,
                        "random corpus spec: n=<int>,p=<p1|p2|...>,count=<int>[,seed=<int>]");
        cmd->add_option_function<std::uint64_t>(
               "--seed", [this](const std::uint64_t& s) { seed_flag = s; },
               "seed for --random (alternative to seed= inside the spec)")
            ->expected(1);
        cmd->add_option("--family", family_name, "family corpus: one graph per parameter value");
        cmd->add_option("--min", family_min, "least family parameter (default: family minimum)");
        cmd->add_option("--max", family_max, "greatest family parameter");
        cmd->add_flag("--odd", odd_only, "keep only odd parameter values");
        cmd->add_flag("--even", even_only, "keep only even parameter values");
        cmd->add_option("--second-offset", second_offset,
                        "two-parameter families use (k, k+offset); default 1");
        cmd->add_option("--fixture", fixtures, "fixture name (repeatable)");
        cmd->add_flag("--fixtures", all_fixtures, "the whole fixture catalog");
    }

    CorpusDescriptor descriptor() const {
        int kinds = 0;
        if (exhaustive_n >= 0) ++kinds;
        if (!random_spec.empty()) ++kinds;
        if (!family_name.empty()) ++kinds;
        if (!fixtures.empty() || all_fixtures) ++kinds;
        if (kinds != 1)
            throw UsageError("choose exactly one corpus: --exhaustive-n, --random, --family, "
                             "or --fixture/--fixtures");

        CorpusDescriptor d;
        if (exhaustive_n >= 0) {
            d.kind = CorpusDescriptor::Kind::exhaustive;
            if (exhaustive_n > 7) throw UsageError("--exhaustive-n supports at most 7");
            d.exhaustive_max_n = exhaustive_n;
            return d;
        }
        if (!random_spec.empty()) return random_descriptor();
        if (!family_name.empty()) return family_descriptor();
        d.kind = CorpusDescriptor::Kind::fixtures;
        d.fixture_list = fixtures; // empty list means the whole catalog
        return d;
    }

private:
    CorpusDescriptor random_descriptor() const {
        CorpusDescriptor d;
        d.kind = CorpusDescriptor::Kind::random;
        bool have_n = false, have_count = false, have_seed = false;
        std::stringstream spec(random_spec);
        std::string item;
        while (std::getline(spec, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw UsageError("malformed --random entry '" + item + "', expected key=value");
            const std::string key = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            try {
                if (key == "n") {
                    d.random_n = std::stoi(value);
                    have_n = true;
                } else if (key == "p") {
                    std::stringstream ps(value);
                    std::string one;
                    while (std::getline(ps, one, '|')) d.random_p.push_back(std::stod(one));
                } else if (key == "count") {
                    d.random_count = std::stoi(value);
                    have_count = true;
                } else if (key == "seed") {
                    d.random_seed = std::stoull(value);
                    have_seed = true;
                } else {
                    throw UsageError("unknown --random key '" + key + "'");
                }
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception&) {
                throw UsageError("malformed --random value '" + item + "'");
            }
        }
        if (!have_seed && seed_flag) {
            d.random_seed = *seed_flag;
            have_seed = true;
        }
        if (!have_n || !have_count || d.random_p.empty())
            throw UsageError("--random needs n=, p= and count=");
        if (!have_seed)
            throw UsageError("--random needs an explicit seed (seed= in the spec or --seed)");
        for (double p : d.random_p)
            if (p < 0.0 || p > 1.0) throw UsageError("--random p must lie in [0,1]");
        if (d.random_n < 0 || d.random_count <= 0)
            throw UsageError("--random needs n >= 0 and count >= 1");
        return d;
    }

    CorpusDescriptor family_descriptor() const {
        CorpusDescriptor d;
        d.kind = CorpusDescriptor::Kind::family;
        d.family_name = family_name;
        d.family_second_offset = second_offset;
        if (odd_only && even_only) throw UsageError("--odd and --even are mutually exclusive");
        int lo = family_min;
        if (lo < 0) {
            if (family_name == "cycle") lo = 3;
            else if (family_name == "friendship") lo = 1;
            else lo = 0;
        }
        if (family_max < lo) throw UsageError("--max is required and must be >= the least value");
        for (int k = lo; k <= family_max; ++k) {
            if (odd_only && k % 2 == 0) continue;
            if (even_only && k % 2 != 0) continue;
            d.family_values.push_back(k);
        }
        if (d.family_values.empty()) throw UsageError("family corpus selects no parameter values");
        return d;
    }
};

std::vector<std::string> parse_theorem_ids(const std::vector<std::string>& raw, bool all) {
    std::vector<std::string> ids;
    for (const auto& entry : raw) {
        std::stringstream ss(entry);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) ids.push_back(id);
    }
    if (all && !ids.empty())
        throw UsageError("--all and --theorem are mutually exclusive");
    for (const auto& id : ids)
        if (!keg::is_catalog_id(id)) throw UsageError("unknown theorem id '" + id + "'");
    return ids; // empty means the whole catalog
}

int run_analyze(const std::string& input, const std::string& format_name,
                const std::string& out_path, std::size_t cap) {
    const keg::Graph g = keg::parse_graph(read_input(input), parse_format(format_name));
    write_output(out_path, keg::report_json(keg::analyze(g, cap)));
    return exit_ok;
}

int run_verify(const CorpusFlags& corpus, const std::vector<std::string>& raw_ids, bool all,
               int jobs, std::size_t cap, const std::string& out_path) {
    const CorpusDescriptor d = corpus.descriptor();
    const std::vector<std::string> ids = parse_theorem_ids(raw_ids, all);
    const auto start = std::chrono::steady_clock::now();
    const keg::CorpusReport report = keg::verify_corpus(d, ids, jobs, cap);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    write_output(out_path, keg::corpus_report_json(report));
    std::uint64_t violated_total = 0;
    for (const auto& t : report.tallies) {
        std::cout << t.id << ": holds=" << t.holds << " violated=" << t.violated
                  << " not-applicable=" << t.not_applicable << "\n";
        violated_total += t.violated;
    }
    std::cout << "corpus=" << report.descriptor << " graphs=" << report.corpus_size
              << " violations=" << violated_total << "\n";
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    return violated_total == 0 ? exit_ok : exit_violation;
}

// ---- search ----------------------------------------------------------------

struct Finding {
    std::string graph_id;
    long long value = 0;
    keg::InvariantReport report;
};

int run_search(const CorpusFlags& corpus, const std::string& objective,
               const std::string& out_path, std::size_t cap) {
    const CorpusDescriptor d = corpus.descriptor();
    if (objective != "cor18-tight" && objective != "cor18-gap-max" &&
        objective != "rho-e-extremal" && objective != "mu-crit-not-in-N-diadem")
        throw UsageError("unknown objective '" + objective + "'");

    const auto graphs = keg::corpus_graphs(d);
    std::vector<Finding> findings;
    std::uint64_t matched = 0;
    bool maximize = objective == "cor18-gap-max" || objective == "rho-e-extremal";

    for (const auto& [id, g] : graphs) {
        const keg::InvariantReport r = keg::analyze(g, cap);
        bool is_match = false;
        long long value = 0;
        if (objective == "cor18-tight") {
            if (r.one_ke && r.rho_v == r.n + r.d - r.xi - r.beta) {
                is_match = true;
                value = r.rho_v;
            }
        } else if (objective == "cor18-gap-max") {
            if (r.one_ke) {
                is_match = true;
                value = static_cast<long long>(r.n + r.d - r.xi - r.beta) - r.rho_v;
            }
        } else if (objective == "rho-e-extremal") {
            is_match = true;
            value = static_cast<long long>(r.rho_e) - r.m;
        } else { // mu-crit-not-in-N-diadem
            long long outside = 0;
            for (int v : r.mu_critical_not_alpha_critical) {
                bool in_nd = false;
                for (int w : r.n_diadem) in_nd = in_nd || w == v;
                if (!in_nd) ++outside;
            }
            if (outside > 0) {
                is_match = true;
                value = outside;
            }
        }
        if (!is_match) continue;
        ++matched;
        findings.push_back({id, value, r});
    }

    // For maximizing objectives keep only the best value; then cap the list.
    long long best = 0;
    if (!findings.empty()) {
        best = findings.front().value;
        for (const auto& f : findings) best = std::max(best, f.value);
        if (maximize) {
            std::vector<Finding> top;
            for (auto& f : findings)
                if (f.value == best) top.push_back(std::move(f));
            findings = std::move(top);
        }
    }
    constexpr std::size_t findings_cap = 10;
    if (findings.size() > findings_cap) findings.resize(findings_cap);

    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "search-findings";
    j["objective"] = objective;
    j["descriptor"] = d.to_string();
    j["examined"] = graphs.size();
    j["matched"] = matched;
    j["best_value"] = best;
    ordered_json list = ordered_json::array();
    for (const auto& f : findings) {
        ordered_json entry;
        entry["graph_id"] = f.graph_id;
        entry["value"] = f.value;
        entry["report"] = ordered_json::parse(keg::report_json(f.report));
        list.push_back(std::move(entry));
    }
    j["findings"] = std::move(list);
    write_output(out_path, j.dump(2) + "\n");
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph invariants, classification and theorem verification"};
    app.require_subcommand(1);

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "compute every invariant of one graph");
    std::string input = "-";
    std::string format_name = "edge-list";
    std::string analyze_out;
    std::size_t cap = keg::enumeration_cap;
    analyze_cmd->add_option("input", input, "input path, or - for stdin");
    analyze_cmd->add_option("--format", format_name, "edge-list | graph6 | dimacs");
    analyze_cmd->add_option("--out", analyze_out, "output path (default stdout)");
    analyze_cmd->add_option("--cap", cap, "enumeration cap");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check the theorem catalog over a corpus");
    CorpusFlags verify_corpus_flags;
    verify_corpus_flags.add_to(verify_cmd);
    std::vector<std::string> theorem_ids;
    bool all_theorems = false;
    int jobs = 1;
    std::string verify_out = "verify-report.json";
    std::size_t verify_cap = keg::enumeration_cap;
    verify_cmd->add_option("--theorem", theorem_ids, "theorem id, comma-separable, repeatable");
    verify_cmd->add_flag("--all", all_theorems, "check the whole catalog (default)");
    verify_cmd->add_option("--jobs", jobs, "worker threads");
    verify_cmd->add_option("--out", verify_out, "report path (default verify-report.json)");
    verify_cmd->add_option("--cap", verify_cap, "enumeration cap");

    // search
    auto* search_cmd = app.add_subcommand("search", "scan a corpus for extremal instances");
    CorpusFlags search_corpus_flags;
    search_corpus_flags.add_to(search_cmd);
    std::string objective;
    std::string search_out;
    std::size_t search_cap = keg::enumeration_cap;
    search_cmd->add_option("--objective", objective,
                           "cor18-tight | cor18-gap-max | rho-e-extremal | mu-crit-not-in-N-diadem")
        ->required();
    search_cmd->add_option("--out", search_out, "output path (default stdout)");
    search_cmd->add_option("--cap", search_cap, "enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(input, format_name, analyze_out, cap);
        if (verify_cmd->parsed())
            return run_verify(verify_corpus_flags, theorem_ids, all_theorems, jobs, verify_cap,
                              verify_out);
        return run_search(search_corpus_flags, objective, search_out, search_cap);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const keg::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const keg::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
