#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "kegraph/errors.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/theorems.hpp"

using keg::CorpusDescriptor;
using keg::Graph;
using keg::Status;

namespace {

Status status_of(const std::string& id, const Graph& g) {
    return keg::check(id, g).status;
}

const keg::TheoremTally& tally_for(const keg::CorpusReport& r, const std::string& id) {
    for (const auto& t : r.tallies)
        if (t.id == id) return t;
    REQUIRE_MESSAGE(false, ("no tally for " + id).c_str());
    static keg::TheoremTally dummy;
    return dummy;
}

}  // namespace

TEST_CASE("catalog is complete and canonically ordered") {
    const std::vector<std::string> expected = {
        "bounds-chain", "th715", "Th1", "cor1", "th911", "th12", "th3",
        "th2", "lem1", "cor25", "prop1_1", "lem84", "cor3", "th8",
        "th10", "th17", "th11", "prop11", "th333", "th100", "th444",
        "cor18", "cor2", "th9", "lem10", "odd-order-remark",
        "critical-edge-lemma"};
    const auto& cat = keg::catalog();
    REQUIRE(cat.size() == expected.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(cat[i].id == expected[i]);
        CHECK_FALSE(cat[i].summary.empty());
        CHECK(keg::is_catalog_id(cat[i].id));
    }
    CHECK_FALSE(keg::is_catalog_id("th999"));
    CHECK_FALSE(keg::is_catalog_id(""));
}

TEST_CASE("status names") {
    CHECK(keg::status_name(Status::holds) == "holds");
    CHECK(keg::status_name(Status::violated) == "violated");
    CHECK(keg::status_name(Status::not_applicable) == "not-applicable");
}

TEST_CASE("unknown ids are rejected") {
    CHECK_THROWS_AS(keg::check("th999", keg::family("cycle", {5})),
                    std::invalid_argument);
}

TEST_CASE("check_all covers the catalog in order") {
    auto results = keg::check_all(keg::family("cycle", {5}));
    REQUIRE(results.size() == keg::catalog().size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        CHECK(results[i].id == keg::catalog()[i].id);
        CHECK(results[i].status != Status::violated);
    }
}

TEST_CASE("statements that hold on an odd cycle") {
    Graph c5 = keg::family("cycle", {5});
    CHECK(status_of("bounds-chain", c5) == Status::holds);
    CHECK(status_of("th715", c5) == Status::holds);
    CHECK(status_of("Th1", c5) == Status::holds);
    CHECK(status_of("cor1", c5) == Status::holds);
    CHECK(status_of("th911", c5) == Status::holds);
    CHECK(status_of("th12", c5) == Status::holds);
    CHECK(status_of("th3", c5) == Status::holds);
    CHECK(status_of("th2", c5) == Status::holds);
    CHECK(status_of("lem84", c5) == Status::holds);
    CHECK(status_of("cor3", c5) == Status::holds);
    CHECK(status_of("th8", c5) == Status::holds);
    CHECK(status_of("th10", c5) == Status::holds);
    CHECK(status_of("th17", c5) == Status::holds);
    CHECK(status_of("cor18", c5) == Status::holds);
    CHECK(status_of("cor2", c5) == Status::holds);
    CHECK(status_of("lem10", c5) == Status::holds);
    CHECK(status_of("odd-order-remark", c5) == Status::holds);
    CHECK(status_of("critical-edge-lemma", c5) == Status::holds);
}

TEST_CASE("hypothesis failures are reported as not applicable, with a note") {
    Graph c4 = keg::family("cycle", {4});
    auto r = keg::check("Th1", c4); // deficiency-zero graph: nothing to test
    CHECK(r.status == Status::not_applicable);
    CHECK_FALSE(r.note.empty());
    CHECK(status_of("cor1", c4) == Status::not_applicable);
    CHECK(status_of("th911", c4) == Status::not_applicable);
    CHECK(status_of("th12", c4) == Status::not_applicable);
    CHECK(status_of("th2", c4) == Status::not_applicable);
    CHECK(status_of("cor18", c4) == Status::not_applicable);
    CHECK(status_of("cor2", c4) == Status::not_applicable);
    CHECK(status_of("odd-order-remark", c4) == Status::not_applicable);
    CHECK(status_of("critical-edge-lemma", c4) == Status::not_applicable);

    Graph c5 = keg::family("cycle", {5});
    CHECK(status_of("th9", c5) == Status::not_applicable);    // needs deficiency 0
    CHECK(status_of("prop1_1", c5) == Status::not_applicable);
    CHECK(status_of("lem84", c4) == Status::not_applicable);  // needs one odd cycle
    CHECK(status_of("cor3", c4) == Status::not_applicable);

    Graph empty(Graph::from_edge_list(0, {}));
    CHECK(status_of("bounds-chain", empty) == Status::not_applicable);
    CHECK(status_of("lem1", empty) == Status::not_applicable);
    CHECK(status_of("cor25", empty) == Status::not_applicable);

    Graph k5 = keg::family("complete", {5}); // deficiency 2: no deletions work
    CHECK(status_of("th8", k5) == Status::not_applicable);
    CHECK(status_of("th10", k5) == Status::not_applicable);
    CHECK(status_of("th3", k5) == Status::not_applicable);
    CHECK(status_of("th17", k5) == Status::not_applicable);
}

TEST_CASE("statements about deficiency-zero graphs hold there") {
    Graph c4 = keg::family("cycle", {4});
    CHECK(status_of("th9", c4) == Status::holds);
    CHECK(status_of("prop1_1", c4) == Status::holds);
    CHECK(status_of("th715", c4) == Status::holds);
    CHECK(status_of("lem1", c4) == Status::holds);
    CHECK(status_of("cor25", c4) == Status::holds);
    CHECK(status_of("th11", c4) == Status::holds);
    CHECK(status_of("prop11", c4) == Status::holds);
    CHECK(status_of("th333", c4) == Status::holds);
    CHECK(status_of("th100", c4) == Status::holds);
    CHECK(status_of("th444", c4) == Status::holds);
}

TEST_CASE("complete graphs") {
    Graph k4 = keg::family("complete", {4});
    CHECK(status_of("lem10", k4) == Status::holds);
    CHECK(status_of("th12", k4) == Status::holds);
    Graph k5 = keg::family("complete", {5});
    CHECK(status_of("lem10", k5) == Status::holds);
    CHECK(status_of("bounds-chain", k5) == Status::holds);
}

TEST_CASE("fixtures satisfy every catalog entry") {
    for (const auto& name : keg::fixture_names()) {
        keg::Analysis a(keg::fixture(name));
        for (const auto& r : keg::check_all(a)) {
            CAPTURE(name);
            CAPTURE(r.id);
            REQUIRE(r.status != Status::violated);
        }
    }
}

TEST_CASE("subset scan refuses oversized graphs") {
    Graph p23 = keg::family("path", {23});
    CHECK_THROWS_AS(keg::check("th11", p23), keg::capacity_error);
}

TEST_CASE("analysis bundles the per-graph data") {
    keg::Analysis a(keg::family("path", {3}));
    CHECK(a.cls.ke);
    REQUIRE(a.omega.size() == 1);
    CHECK(a.omega.front() == keg::VertexSet(3, {0, 2}));
    CHECK(a.core.core == keg::VertexSet(3, {0, 2}));
    CHECK(a.crit.d == 1);
    CHECK(a.bipartite);
    CHECK_FALSE(a.almost_bip);
    CHECK(a.omega_supportive.empty()); // only populated off the KE case

    keg::Analysis b(keg::family("cycle", {5}));
    CHECK(b.omega_supportive.size() == b.omega.size());
}

TEST_CASE("corpus descriptors render canonically") {
    CorpusDescriptor ex;
    ex.kind = CorpusDescriptor::Kind::exhaustive;
    ex.exhaustive_max_n = 6;
    CHECK(ex.to_string() == "exhaustive:n<=6");

    CorpusDescriptor rnd;
    rnd.kind = CorpusDescriptor::Kind::random;
    rnd.random_n = 12;
    rnd.random_p = {0.1, 0.3, 0.5};
    rnd.random_count = 1000;
    rnd.random_seed = 42;
    CHECK(rnd.to_string() == "random:n=12,p=0.1|0.3|0.5,count=1000,seed=42");

    CorpusDescriptor fam;
    fam.kind = CorpusDescriptor::Kind::family;
    fam.family_name = "cycle";
    fam.family_values = {3, 5, 7};
    CHECK(fam.to_string() == "family:cycle:k=3|5|7");

    CorpusDescriptor fix;
    fix.kind = CorpusDescriptor::Kind::fixtures;
    CHECK(fix.to_string() == "fixtures:all");
    fix.fixture_list = {"fig5-G1", "fig5-G2"};
    CHECK(fix.to_string() == "fixtures:fig5-G1|fig5-G2");
}

TEST_CASE("corpus materialization") {
    CorpusDescriptor ex;
    ex.kind = CorpusDescriptor::Kind::exhaustive;
    ex.exhaustive_max_n = 3;
    auto graphs = keg::corpus_graphs(ex);
    CHECK(graphs.size() == 1 + 1 + 2 + 8);
    CHECK(graphs.front().first == "exh:n=0:mask=0");
    CHECK(graphs.back().first == "exh:n=3:mask=7");

    CorpusDescriptor rnd;
    rnd.kind = CorpusDescriptor::Kind::random;
    rnd.random_n = 6;
    rnd.random_p = {0.2, 0.8};
    rnd.random_count = 3;
    rnd.random_seed = 5;
    auto rgraphs = keg::corpus_graphs(rnd);
    REQUIRE(rgraphs.size() == 6);
    CHECK(rgraphs[0].first == "rnd:j=0:n=6:p=0.2:seed=5");
    CHECK(rgraphs[5].first == "rnd:j=5:n=6:p=0.8:seed=10");
    // the j-th graph uses seed base + j, so it is reproducible in isolation
    CHECK(rgraphs[5].second == keg::erdos_renyi(6, 0.8, 10));

    CorpusDescriptor fam;
    fam.kind = CorpusDescriptor::Kind::family;
    fam.family_name = "cycle";
    fam.family_values = {3, 5};
    auto fgraphs = keg::corpus_graphs(fam);
    REQUIRE(fgraphs.size() == 2);
    CHECK(fgraphs[0].first == "fam:cycle:k=3");
    CHECK(fgraphs[0].second == keg::family("cycle", {3}));

    CorpusDescriptor fix;
    fix.kind = CorpusDescriptor::Kind::fixtures;
    auto xgraphs = keg::corpus_graphs(fix);
    CHECK(xgraphs.size() == 21);
    CHECK(xgraphs.front().first == "fix:fig1-G1");
}

TEST_CASE("verification over the odd cycle family") {
    CorpusDescriptor fam;
    fam.kind = CorpusDescriptor::Kind::family;
    fam.family_name = "cycle";
    fam.family_values = {3, 5, 7, 9};
    auto report = keg::verify_corpus(fam, {});
    CHECK(report.corpus_size == 4);
    CHECK(report.violations.empty());
    CHECK(tally_for(report, "lem10").holds == 4);
    CHECK(tally_for(report, "odd-order-remark").holds == 4);
    CHECK(tally_for(report, "cor18").holds == 4);
    CHECK(tally_for(report, "th9").not_applicable == 4);
    CHECK(report.theorems.size() == keg::catalog().size());
}

TEST_CASE("verification tallies sum to the corpus size") {
    CorpusDescriptor ex;
    ex.kind = CorpusDescriptor::Kind::exhaustive;
    ex.exhaustive_max_n = 4;
    auto report = keg::verify_corpus(ex, {"bounds-chain", "th715", "lem10"});
    CHECK(report.corpus_size == 76);
    REQUIRE(report.theorems == std::vector<std::string>{"bounds-chain", "th715", "lem10"});
    for (const auto& t : report.tallies) {
        CHECK(t.holds + t.violated + t.not_applicable == report.corpus_size);
        CHECK(t.violated == 0);
    }
}

TEST_CASE("checker subsets are validated and deduplicated in catalog order") {
    CorpusDescriptor fam;
    fam.kind = CorpusDescriptor::Kind::family;
    fam.family_name = "cycle";
    fam.family_values = {5};
    auto report = keg::verify_corpus(fam, {"th9", "bounds-chain", "th9"});
    REQUIRE(report.theorems == std::vector<std::string>{"bounds-chain", "th9"});
    CHECK_THROWS_AS(keg::verify_corpus(fam, {"th999"}), std::invalid_argument);
}

TEST_CASE("parallel verification is byte-identical to serial") {
    CorpusDescriptor ex;
    ex.kind = CorpusDescriptor::Kind::exhaustive;
    ex.exhaustive_max_n = 5;
    auto serial = keg::corpus_report_json(keg::verify_corpus(ex, {}, 1));
    auto parallel = keg::corpus_report_json(keg::verify_corpus(ex, {}, 4));
    CHECK(serial == parallel);
}

TEST_CASE("corpus report JSON carries tallies and violations") {
    keg::CorpusReport r;
    r.descriptor = "fixtures:all";
    r.theorems = {"bounds-chain"};
    r.corpus_size = 21;
    r.tallies.push_back({"bounds-chain", 20, 1, 0});
    r.violations.push_back(
        {"bounds-chain", "fix:fig1-G1",
         "{\"graph\":{\"n\":1,\"m\":0,\"edges\":[]},\"detail\":{\"reason\":\"synthetic\"}}"});
    auto text = keg::corpus_report_json(r);
    CHECK(text.back() == '\n');
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("kind") == "corpus-report");
    CHECK(j.at("descriptor") == "fixtures:all");
    CHECK(j.at("corpus_size") == 21);
    REQUIRE(j.at("tallies").size() == 1);
    CHECK(j.at("tallies")[0].at("holds") == 20);
    REQUIRE(j.at("violations").size() == 1);
    const auto& v = j.at("violations")[0];
    CHECK(v.at("theorem") == "bounds-chain");
    CHECK(v.at("graph_id") == "fix:fig1-G1");
    // the witness is embedded as structured JSON, not as an opaque string
    CHECK(v.at("witness").at("graph").at("n") == 1);
    CHECK(v.at("witness").at("detail").at("reason") == "synthetic");
}
