#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <turanlab/counting.hpp>
#include <turanlab/error.hpp>
#include <turanlab/graph6.hpp>
#include <turanlab/oracle.hpp>

#include "support.hpp"

#include <algorithm>
#include <set>

using namespace turanlab;
using namespace testing;

namespace {

// Brute-force class count: filter all labeled graphs, dedup by canonical key.
int brute_class_count(int n, const std::optional<Pattern>& forbidden) {
    std::set<CanonicalKey> keys;
    for (const Graph& g : all_labeled_graphs(n)) {
        if (forbidden && contains_pattern(g, *forbidden)) continue;
        keys.insert(canonical_key(g));
    }
    return static_cast<int>(keys.size());
}

} // namespace

TEST_CASE("isomorphism-class enumeration matches the catalog") {
    // all graphs: 1, 2, 4, 11, 34, 156, 1044, 12346 classes on 1..8 vertices
    const long long all_counts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 0; n <= 8; ++n) {
        auto graphs = enumerate_all_graphs(n);
        CHECK(static_cast<long long>(graphs.size()) == all_counts[n]);
    }
    // triangle-free: 1, 2, 3, 7, 14, 38, 107, 410
    const long long tf_counts[] = {1, 1, 2, 3, 7, 14, 38, 107, 410};
    for (int n = 1; n <= 8; ++n) {
        auto graphs = enumerate_forbidden_free(n, Pattern::clique(3));
        CHECK(static_cast<long long>(graphs.size()) == tf_counts[n]);
        for (const Graph& g : graphs) CHECK(g.is_triangle_free());
    }
}

TEST_CASE("enumeration output is canonical, unique, and complete") {
    for (int n = 1; n <= 5; ++n) {
        for (auto forbidden : std::vector<std::optional<Pattern>>{
                 std::nullopt, Pattern::clique(3), Pattern::double_star(1, 1)}) {
            auto graphs = enumerate_forbidden_free(n, forbidden);
            std::set<std::string> seen;
            for (const Graph& g : graphs) {
                CHECK(g.order() == n);
                // each representative is its own canonical form
                std::string s = graph6_encode(g);
                CHECK(graph6_encode(canonical_form(g)) == s);
                // graph6 round-trips byte-identically
                CHECK(graph6_encode(graph6_decode(s)) == s);
                CHECK(seen.insert(s).second);
            }
            CHECK(static_cast<int>(graphs.size()) == brute_class_count(n, forbidden));
        }
    }
}

TEST_CASE("enumeration is deterministic and thread-count independent") {
    for (int threads : {1, 4}) {
        auto graphs = enumerate_forbidden_free(6, Pattern::clique(3), threads);
        auto again = enumerate_forbidden_free(6, Pattern::clique(3), threads);
        REQUIRE(graphs.size() == again.size());
        for (std::size_t i = 0; i < graphs.size(); ++i) CHECK(graphs[i] == again[i]);
    }
    auto one = enumerate_forbidden_free(6, std::nullopt, 1);
    auto four = enumerate_forbidden_free(6, std::nullopt, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
}

TEST_CASE("exhaustive extremal counts on small hosts") {
    // max S_{1,1} copies over S_{1,2}-free graphs on 4 vertices: K_4
    {
        ExtremalRecord rec = ex_exhaustive(4, Pattern::double_star(1, 1),
                                           Pattern::double_star(1, 2));
        CHECK(rec.value == 12);
        REQUIRE(rec.witnesses.size() == 1);
        CHECK(rec.witnesses[0] == "C~");
        CHECK(rec.method == ExtremalRecord::Method::exhaustive);
        CHECK(!rec.witnesses_truncated);
        CHECK(rec.graphs_enumerated == 11);
    }
    // max S_{1,1} copies over triangle-free graphs on 5 vertices: K_{2,3}
    {
        ExtremalRecord rec =
            ex_exhaustive(5, Pattern::double_star(1, 1), Pattern::clique(3));
        CHECK(rec.value == 12);
        REQUIRE(rec.witnesses.size() == 1);
        CHECK(rec.witnesses[0] == "DFw");
        CHECK(rec.graphs_enumerated == 14);
    }
    // max triangles over S_{1,1}-free graphs on 4 vertices: only matchings
    // and stars survive, so zero triangles... except K_3 + K_1 contains
    // S_{1,1}: the true maximizer is a single triangle-free class. Value 0.
    {
        ExtremalRecord rec = ex_exhaustive(4, Pattern::clique(3),
                                           Pattern::double_star(1, 1));
        CHECK(rec.value == 1);
        REQUIRE(rec.witnesses.size() == 1);
        CHECK(rec.witnesses[0] == "CJ");
        CHECK(rec.graphs_enumerated == 6);
    }
}

TEST_CASE("exhaustive witnesses attain the value and avoid the forbidden pattern") {
    for (int n = 4; n <= 7; ++n) {
        Pattern h = Pattern::double_star(1, 1);
        Pattern f = Pattern::double_star(1, 2);
        ExtremalRecord rec = ex_exhaustive(n, h, f);
        CHECK(!rec.witnesses.empty());
        for (const std::string& w : rec.witnesses) {
            Graph g = graph6_decode(w);
            CHECK(count_pattern(g, h) == rec.value);
            CHECK(!contains_pattern(g, f));
        }
        CHECK(std::is_sorted(rec.witnesses.begin(), rec.witnesses.end()));
    }
}

TEST_CASE("exhaustive search is thread-count independent") {
    Pattern h = Pattern::double_star(1, 1);
    Pattern f = Pattern::clique(3);
    OracleOptions one, four;
    one.threads = 1;
    four.threads = 4;
    for (int n = 5; n <= 7; ++n) {
        ExtremalRecord a = ex_exhaustive(n, h, f, one);
        ExtremalRecord b = ex_exhaustive(n, h, f, four);
        CHECK(a.value == b.value);
        CHECK(a.witnesses == b.witnesses);
        CHECK(a.graphs_enumerated == b.graphs_enumerated);
    }
}

TEST_CASE("witness truncation respects the limit") {
    // max K_3 over S_{1,1}-free graphs on 5 vertices: two maximizers
    // (triangle plus two isolated vertices, triangle plus a disjoint edge)
    ExtremalRecord full = ex_exhaustive(5, Pattern::clique(3), Pattern::double_star(1, 1));
    CHECK(full.value == 1);
    REQUIRE(full.witnesses.size() == 2);
    CHECK(full.witnesses[0] == "D@K");
    CHECK(full.witnesses[1] == "D`K");
    CHECK(!full.witnesses_truncated);

    OracleOptions opts;
    opts.witness_limit = 1;
    ExtremalRecord cut =
        ex_exhaustive(5, Pattern::clique(3), Pattern::double_star(1, 1), opts);
    CHECK(cut.value == full.value);
    CHECK(cut.witnesses.size() == 1);
    CHECK(cut.witnesses_truncated);
    CHECK(cut.witnesses[0] == full.witnesses[0]);
}

TEST_CASE("stochastic search is seed-deterministic and sound") {
    Pattern h = Pattern::double_star(1, 1);
    Pattern f = Pattern::clique(3);
    ExtremalRecord a = ex_stochastic(12, h, f, 42, 400);
    ExtremalRecord b = ex_stochastic(12, h, f, 42, 400);
    CHECK(a.value == b.value);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.method == ExtremalRecord::Method::stochastic);
    for (const std::string& w : a.witnesses) {
        Graph g = graph6_decode(w);
        CHECK(g.order() == 12);
        CHECK(!contains_pattern(g, f));
        CHECK(count_pattern(g, h) == a.value);
    }
    // never worse than the best seeded construction: K_{6,6} gives 36*25
    CHECK(a.value >= 900);
    // on exhaustive-reachable sizes the lower bound cannot exceed the truth
    ExtremalRecord exact = ex_exhaustive(7, h, f);
    ExtremalRecord guess = ex_stochastic(7, h, f, 7, 300);
    CHECK(guess.value <= exact.value);
}

TEST_CASE("record serialization shape") {
    ExtremalRecord rec = ex_exhaustive(4, Pattern::double_star(1, 1),
                                       Pattern::double_star(1, 2));
    nlohmann::json j = record_to_json(rec);
    CHECK(j["n"] == 4);
    CHECK(j["pattern"] == "dstar:1,1");
    CHECK(j["forbidden"] == "dstar:1,2");
    CHECK(j["value"] == "12");  // decimal string, not a JSON number
    CHECK(j["method"] == "exhaustive");
    CHECK(j["witnesses"].is_array());
    CHECK(j["witnesses"][0] == "C~");
    CHECK(j["witnesses_truncated"] == false);
    CHECK(j["graphs_enumerated"] == 11);
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("enumeration guards its capacity") {
    CHECK_THROWS_AS(enumerate_all_graphs(11), CapacityError);
    CHECK_THROWS_AS(enumerate_all_graphs(-1), ArgumentError);
}
