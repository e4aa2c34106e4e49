#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kegraph/classify.hpp"
#include "kegraph/critical.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/independence.hpp"

namespace keg {

enum class Status { holds, violated, not_applicable };

std::string status_name(Status s); // "holds" | "violated" | "not-applicable"

struct TheoremInfo {
    std::string id;
    std::string summary;
};

// Fixed catalog in canonical order; every checker id appears exactly once.
const std::vector<TheoremInfo>& catalog();
bool is_catalog_id(const std::string& id);

struct TheoremResult {
    std::string id;
    Status status = Status::not_applicable;
    std::string note;         // set when not applicable: which hypothesis failed
    std::string witness_json; // set when violated: self-contained JSON witness
};

// Everything the checkers consult about one graph, computed once.
struct Analysis {
    Graph g;
    Classification cls;
    std::vector<VertexSet> omega; // all maximum independent sets
    CoreXi core;
    CriticalProfile crit;
    bool bipartite = false;
    bool almost_bip = false;
    // Per-omega supportive flags; filled only when the graph is not KE
    // (the checkers that consult them are vacuous on KE graphs).
    std::vector<char> omega_supportive;

    explicit Analysis(Graph graph, std::size_t cap = enumeration_cap);
};

TheoremResult check(const std::string& id, const Analysis& a);
TheoremResult check(const std::string& id, const Graph& g);
std::vector<TheoremResult> check_all(const Analysis& a); // one result per catalog entry
std::vector<TheoremResult> check_all(const Graph& g);

// Corpus descriptors cover the four corpus kinds the CLI exposes. The
// descriptor alone determines the generated (id, graph) sequence.
struct CorpusDescriptor {
    enum class Kind { exhaustive, random, family, fixtures };
    Kind kind = Kind::exhaustive;

    int exhaustive_max_n = 0; // exhaustive: all labeled graphs for n = 0..max

    int random_n = 0; // random: for each p, `random_count` graphs; the j-th
    std::vector<double> random_p;        // graph overall uses seed random_seed + j
    int random_count = 0;
    std::uint64_t random_seed = 0;

    std::string family_name; // family: one graph per value k; two-parameter
    std::vector<int> family_values;      // families get (k, k + family_second_offset)
    int family_second_offset = 1;

    std::vector<std::string> fixture_list; // fixtures: empty means all

    std::string to_string() const; // canonical text used in reports
};

// Materializes the corpus; ids are stable strings unique within the corpus.
std::vector<std::pair<std::string, Graph>> corpus_graphs(const CorpusDescriptor& d);

struct TheoremTally {
    std::string id;
    std::uint64_t holds = 0;
    std::uint64_t violated = 0;
    std::uint64_t not_applicable = 0;
};

struct Violation {
    std::string theorem;
    std::string graph_id;
    std::string witness_json;
};

struct CorpusReport {
    std::string descriptor;
    std::vector<std::string> theorems; // checked ids, catalog order
    std::uint64_t corpus_size = 0;
    std::vector<TheoremTally> tallies; // same order as `theorems`
    std::vector<Violation> violations; // corpus order, then catalog order
};

// Runs the given checkers (catalog order; empty means the whole catalog) over
// the corpus. `jobs` only parallelizes evaluation; the report is identical
// for any jobs value.
CorpusReport verify_corpus(const CorpusDescriptor& d, std::vector<std::string> ids,
                           int jobs = 1, std::size_t cap = enumeration_cap);

std::string corpus_report_json(const CorpusReport& r); // deterministic bytes

} // namespace keg
