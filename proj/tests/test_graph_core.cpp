#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <turanlab/canonical.hpp>
#include <turanlab/error.hpp>
#include <turanlab/graph.hpp>
#include <turanlab/graph6.hpp>
#include <turanlab/matching.hpp>
#include <turanlab/oracle.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

using namespace turanlab;
using namespace testing;

TEST_CASE("graph basics") {
    Graph g(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(!g.has_edge(0, 1));
    CHECK(g.neighbors(2) == bit(1));

    CHECK_THROWS_AS(g.add_edge(2, 2), ArgumentError);
    CHECK_THROWS_AS(g.add_edge(0, 5), ArgumentError);
    CHECK_THROWS_AS(Graph(-1), ArgumentError);
    CHECK_THROWS_AS(Graph(65), CapacityError);
}

TEST_CASE("edge list and from_edges round-trip") {
    Graph g = make_cycle(5);
    auto edges = g.edge_list();
    CHECK(edges.size() == 5);
    CHECK(Graph::from_edges(5, edges) == g);
}

TEST_CASE("common neighbors, masks, append") {
    Graph k4 = make_complete(4);
    CHECK(k4.common_neighbor_count(0, 1) == 2);
    CHECK_THROWS_AS(k4.common_neighbor_count(2, 2), ArgumentError);
    CHECK(k4.vertex_mask() == 0xF);

    Graph g = make_path(3).with_appended_vertex(bit(0) | bit(2));
    CHECK(g.order() == 4);
    CHECK(g.has_edge(3, 0));
    CHECK(!g.has_edge(3, 1));
    CHECK(g.has_edge(3, 2));

    Graph full(64);
    CHECK(full.vertex_mask() == ~VertexSet{0});
}

TEST_CASE("permuted relabels consistently") {
    Graph p4 = make_path(4);
    // vertex i -> slot perm[i]
    std::vector<int> perm = {3, 1, 0, 2};
    Graph q = p4.permuted(perm);
    CHECK(q.edge_count() == 3);
    CHECK(q.has_edge(3, 1)); // image of 0-1
    CHECK(q.has_edge(1, 0)); // image of 1-2
    CHECK(q.has_edge(0, 2)); // image of 2-3
}

TEST_CASE("triangle-free and bipartite predicates") {
    CHECK(make_cycle(5).is_triangle_free());
    CHECK(!make_cycle(5).is_bipartite());
    CHECK(make_cycle(6).is_bipartite());
    CHECK(!make_complete(3).is_triangle_free());
    CHECK(make_complete_bipartite(3, 4).is_bipartite());
    CHECK(make_complete_bipartite(3, 4).is_triangle_free());
    CHECK(Graph(0).is_bipartite());
    CHECK(disjoint_union(make_cycle(4), make_cycle(3)).is_bipartite() == false);
    CHECK(disjoint_union(make_cycle(4), make_cycle(6)).is_bipartite());
}

TEST_CASE("graph6 encodes known strings") {
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_encode(make_complete(2)) == "A_");
    CHECK(graph6_encode(make_complete_bipartite(2, 2)) == "C]");
    // 5-cycle on consecutive vertices
    CHECK(graph6_encode(make_cycle(5)) == "Dhc");
}

TEST_CASE("graph6 round-trips every graph incl. long form") {
    for (int n : {0, 1, 2, 5, 62, 63, 64}) {
        Graph g(n);
        std::mt19937_64 rng(7 + static_cast<std::uint64_t>(n));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        std::string s = graph6_encode(g);
        if (n >= 63) CHECK(s[0] == '~');
        CHECK(graph6_decode(s) == g);
        CHECK(graph6_encode(graph6_decode(s)) == s);
    }
}

TEST_CASE("graph6 decode errors are specific") {
    CHECK_THROWS_AS(graph6_decode(""), DecodeError);
    CHECK_THROWS_AS(graph6_decode("~~A"), DecodeError);  // >18-bit form unsupported
    CHECK_THROWS_AS(graph6_decode("~A"), DecodeError);   // truncated long-form order
    CHECK_THROWS_AS(graph6_decode("D"), DecodeError);    // truncated body
    CHECK_THROWS_AS(graph6_decode("A_?"), DecodeError);  // trailing data
    CHECK_THROWS_AS(graph6_decode("A\x1f"), DecodeError); // byte out of range
    CHECK_THROWS_AS(graph6_decode("Aw"), DecodeError);   // nonzero padding bits
    CHECK_THROWS_AS(graph6_decode("A_ "), DecodeError);
}

TEST_CASE("decode respects the vertex cap") {
    // "~" + 18-bit 65 = bytes 63+0, 63+1, 63+1 -> "~?@@" then body; the
    // order check fires before the body is read
    std::string too_big = "~?@@";
    CHECK_THROWS_AS(graph6_decode(too_big), CapacityError);
}

TEST_CASE("canonical form is invariant under relabeling") {
    for (int n = 1; n <= 7; ++n) {
        Graph g = random_graph(n, 400, 100 + static_cast<std::uint64_t>(n));
        auto key = canonical_key(g);
        for (int trial = 0; trial < 6; ++trial) {
            Graph h = g.permuted(random_permutation(n, 900 + static_cast<std::uint64_t>(10 * n + trial)));
            CHECK(canonical_key(h) == key);
            CHECK(canonical_form(h) == canonical_form(g));
        }
    }
}

TEST_CASE("canonical labeling order actually produces the form") {
    Graph g = random_graph(7, 500, 42);
    auto lab = canonical_labeling(g);
    std::vector<int> perm(7);
    for (int slot = 0; slot < 7; ++slot) perm[static_cast<std::size_t>(lab.order[static_cast<std::size_t>(slot)])] = slot;
    CHECK(g.permuted(perm) == lab.form);
    CHECK(canonical_key(lab.form) == lab.key);
}

TEST_CASE("canonical key separates the hard degree-regular pairs") {
    // pairs that defeat pure refinement: isomorphic, previously collided
    const char* pairs[][2] = {{"F@UuO", "FAMm_"}, {"FBYmg", "FHU^G"}, {"FF~fG", "FK~v_"}};
    for (auto& pr : pairs) {
        Graph a = graph6_decode(pr[0]), b = graph6_decode(pr[1]);
        CHECK(find_isomorphism(a, b).has_value());
        CHECK(canonical_key(a) == canonical_key(b));
        CHECK(canonical_form(a) == canonical_form(b));
    }
    // and a non-isomorphic same-degree-sequence pair: C_6 vs 2C_3
    Graph c6 = make_cycle(6), cc = disjoint_union(make_cycle(3), make_cycle(3));
    CHECK(!find_isomorphism(c6, cc).has_value());
    CHECK(canonical_key(c6) != canonical_key(cc));
}

TEST_CASE("canonical key counts classes exactly (labeled brute force)") {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156}; // classes on 0..6 vertices
    for (int n = 0; n <= 6; ++n) CHECK(count_classes(all_labeled_graphs(n)) == expected[n]);
}

TEST_CASE("key equality matches isomorphism on all n<=6 class pairs") {
    for (int n = 4; n <= 6; ++n) {
        // one representative per class
        std::map<CanonicalKey, Graph> reps;
        for (const auto& g : all_labeled_graphs(n)) reps.emplace(canonical_key(g), g);
        std::vector<Graph> classes;
        for (auto& [k, g] : reps) classes.push_back(g);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                CHECK(!find_isomorphism(classes[i], classes[j]).has_value());
    }
}

TEST_CASE("find_isomorphism returns a real isomorphism") {
    Graph g = random_graph(7, 500, 5);
    Graph h = g.permuted(random_permutation(7, 55));
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            CHECK(g.has_edge(u, v) ==
                  h.has_edge((*iso)[static_cast<std::size_t>(u)], (*iso)[static_cast<std::size_t>(v)]));
}

TEST_CASE("maximum matching on named graphs") {
    CHECK(max_matching_size(disjoint_union(disjoint_union(make_complete(2), make_complete(2)),
                                           make_complete(2))) == 3); // 3K_2
    CHECK(max_matching_size(make_star(5)) == 1);
    CHECK(max_matching_size(make_cycle(5)) == 2);
    CHECK(max_matching_size(make_cycle(9)) == 4);
    CHECK(max_matching_size(make_complete(7)) == 3);
    CHECK(max_matching_size(Graph(4)) == 0);
    CHECK(max_matching_size(make_complete_bipartite(3, 5)) == 3);
    // Petersen graph has a perfect matching
    Graph pete = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(max_matching_size(pete) == 5);
}

TEST_CASE("matching witness is a valid matching of the claimed size") {
    for (int n = 2; n <= 9; ++n) {
        Graph g = random_graph(n, 500, 300 + static_cast<std::uint64_t>(n));
        auto edges = maximum_matching(g);
        CHECK(static_cast<int>(edges.size()) == max_matching_size(g));
        VertexSet seen = 0;
        for (auto [u, v] : edges) {
            CHECK(g.has_edge(u, v));
            CHECK((seen & (bit(u) | bit(v))) == 0);
            seen |= bit(u) | bit(v);
        }
    }
}

TEST_CASE("blossom agrees with subset-DP on dense odd graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 5 + static_cast<int>(seed % 6);
        Graph g = random_graph(n, 600, 7000 + seed);
        // force the blossom path by lifting the graph above the DP cutoff
        Graph big(21);
        for (auto [u, v] : g.edge_list()) big.add_edge(u, v);
        CHECK(max_matching_size(big) == max_matching_size(g));
    }
}

TEST_CASE("minimum vertex cover exact values and witness") {
    CHECK(min_vertex_cover_size(make_cycle(5)) == 3);
    CHECK(min_vertex_cover_size(make_complete(6)) == 5);
    CHECK(min_vertex_cover_size(make_star(7)) == 1);
    CHECK(min_vertex_cover_size(Graph(3)) == 0);
    CHECK(min_vertex_cover_size(make_complete_bipartite(2, 6)) == 2);

    for (int n = 2; n <= 8; ++n) {
        Graph g = random_graph(n, 450, 40 + static_cast<std::uint64_t>(n));
        auto cover = min_vertex_cover(g);
        CHECK(static_cast<int>(cover.size()) == min_vertex_cover_size(g));
        VertexSet mask = 0;
        for (int v : cover) mask |= bit(v);
        for (auto [u, v] : g.edge_list()) CHECK((mask & (bit(u) | bit(v))) != 0);
    }
}

TEST_CASE("Konig: cover equals matching on every bipartite class, n<=7") {
    // both sides are isomorphism-invariant, so class representatives cover
    // all bipartite graphs
    for (int n = 1; n <= 7; ++n) {
        long long checked = 0;
        for (const auto& g : turanlab::enumerate_all_graphs(n)) {
            if (!g.is_bipartite()) continue;
            ++checked;
            CHECK(min_vertex_cover_size(g) == max_matching_size(g));
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("star-or-matching witness and named values") {
    auto r = star_or_matching_lower_bound(make_complete(3));
    CHECK(r.kind == StarOrMatching::Kind::star); // Delta=2 beats nu=1
    CHECK(r.size == 2);

    auto m = star_or_matching_lower_bound(
        disjoint_union(disjoint_union(make_complete(2), make_complete(2)),
                       disjoint_union(make_complete(2), make_complete(2))));
    CHECK(m.kind == StarOrMatching::Kind::matching);
    CHECK(m.size == 4);

    auto s = star_or_matching_lower_bound(make_star(9));
    CHECK(s.kind == StarOrMatching::Kind::star);
    CHECK(s.size == 9);

    for (int n = 1; n <= 8; ++n) {
        Graph g = random_graph(n, 500, 600 + static_cast<std::uint64_t>(n));
        auto w = star_or_matching_lower_bound(g);
        CHECK(w.size == std::max(g.max_degree(), max_matching_size(g)));
        CHECK(static_cast<int>(w.witness.size()) == w.size);
        for (auto [u, v] : w.witness) CHECK(g.has_edge(u, v));
        if (w.kind == StarOrMatching::Kind::star && w.size > 1) {
            // all witness edges share one vertex
            VertexSet common = ~VertexSet{0};
            for (auto [u, v] : w.witness) common &= bit(u) | bit(v);
            CHECK(std::popcount(common) == 1);
        }
        if (w.kind == StarOrMatching::Kind::matching) {
            VertexSet seen = 0;
            for (auto [u, v] : w.witness) {
                CHECK((seen & (bit(u) | bit(v))) == 0);
                seen |= bit(u) | bit(v);
            }
        }
    }
}

// the star-or-matching threshold theorem: f(k) edges force max(Delta, nu) >= k,
// f(k) = k(k-1) for even k, k^2+(k-1)/2 for odd k
TEST_CASE("star-or-matching threshold form holds on every graph, n<=6") {
    auto f = [](long long k) { return k % 2 == 0 ? k * (k - 1) : k * k + (k - 1) / 2; };
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : all_labeled_graphs(n)) {
            const long long e = g.edge_count();
            const int s = star_or_matching_lower_bound(g).size;
            for (int k = 1; f(k) <= e; ++k) CHECK(s >= k);
            // the rounded-down square-root weak form; the rounded-up form is
            // false (C_5: 5 edges, best star/matching 2)
            if (e > 0) CHECK(static_cast<long long>(s + 1) * (s + 1) > e);
        }
    }
    const Graph c5 = make_cycle(5);
    CHECK(star_or_matching_lower_bound(c5).size == 2); // < ceil(sqrt(5)) = 3
}

TEST_CASE("vertex cap env override") {
    // vertex_cap() is cached; just sanity-check the default range contract
    CHECK(vertex_cap() >= 1);
    CHECK(vertex_cap() <= 64);
    CHECK_THROWS_AS(Graph(vertex_cap() + 1), CapacityError);
}
