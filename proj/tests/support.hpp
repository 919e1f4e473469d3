#pragma once

// shared helpers for the test binaries: small named graphs, labeled-graph
// brute force, seeded random graphs

#include <turanlab/canonical.hpp>
#include <turanlab/graph.hpp>

#include <random>
#include <set>
#include <vector>

namespace testing {

inline turanlab::Graph make_complete(int n) {
    turanlab::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline turanlab::Graph make_path(int n) {
    turanlab::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline turanlab::Graph make_cycle(int n) {
    turanlab::Graph g = make_path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

// center 0, leaves 1..k
inline turanlab::Graph make_star(int k) {
    turanlab::Graph g(k + 1);
    for (int v = 1; v <= k; ++v) g.add_edge(0, v);
    return g;
}

inline turanlab::Graph make_complete_bipartite(int s, int t) {
    turanlab::Graph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = s; v < s + t; ++v) g.add_edge(u, v);
    return g;
}

inline turanlab::Graph disjoint_union(const turanlab::Graph& a, const turanlab::Graph& b) {
    turanlab::Graph g(a.order() + b.order());
    for (auto [u, v] : a.edge_list()) g.add_edge(u, v);
    for (auto [u, v] : b.edge_list()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

// all 2^C(n,2) labeled graphs; fine for n <= 6
inline std::vector<turanlab::Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<turanlab::Graph> out;
    out.reserve(std::size_t{1} << slots.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        turanlab::Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

// number of isomorphism classes among `graphs`, via canonical keys
inline std::size_t count_classes(const std::vector<turanlab::Graph>& graphs) {
    std::set<turanlab::CanonicalKey> keys;
    for (const auto& g : graphs) keys.insert(turanlab::canonical_key(g));
    return keys.size();
}

// G(n, p) with a fixed seed; p in thousandths to keep call sites exact
inline turanlab::Graph random_graph(int n, int p_mille, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    turanlab::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 1000) < p_mille) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    return perm;
}

} // namespace testing
