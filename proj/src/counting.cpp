#include "turanlab/counting.hpp"

#include "turanlab/error.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>

namespace turanlab {

namespace {

// ascending-vertex clique DFS; counts fit in uint64 (<= C(64,32) < 2^63)
std::uint64_t clique_count_rec(const Graph& g, VertexSet cand, int need) {
    if (need == 0) return 1;
    if (std::popcount(cand) < need) return 0;
    std::uint64_t total = 0;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        total += clique_count_rec(g, g.neighbors(v) & cand, need - 1);
    }
    return total;
}

bool clique_exists_rec(const Graph& g, VertexSet cand, int need) {
    if (need == 0) return true;
    if (std::popcount(cand) < need) return false;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (clique_exists_rec(g, g.neighbors(v) & cand, need - 1)) return true;
    }
    return false;
}

// K_{s,t} copies: pick the s-side as an ascending vertex set, then any
// t-subset of its common neighborhood (disjointness from the s-side is
// automatic, no self-loops). Each copy shows up once, twice when s == t.
BigInt kbip_count_rec(const Graph& g, VertexSet common, int min_vertex, int s_left, int t) {
    if (s_left == 0) return binomial(std::popcount(common), t);
    if (std::popcount(common) < t) return 0;
    BigInt total = 0;
    for (int v = min_vertex; v < g.order(); ++v)
        total += kbip_count_rec(g, common & g.neighbors(v), v + 1, s_left - 1, t);
    return total;
}

bool kbip_exists_rec(const Graph& g, VertexSet common, int min_vertex, int s_left, int t) {
    if (std::popcount(common) < t) return false;
    if (s_left == 0) return true;
    for (int v = min_vertex; v < g.order(); ++v)
        if (kbip_exists_rec(g, common & g.neighbors(v), v + 1, s_left - 1, t)) return true;
    return false;
}

// pairs of vertex-disjoint edges inside G[N(x)]: C(m,2) minus pairs sharing
// an endpoint
std::int64_t disjoint_edge_pairs_in_neighborhood(const Graph& g, int x) {
    VertexSet nb = g.neighbors(x);
    std::int64_t m = 0, sharing = 0;
    VertexSet scan = nb;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        std::int64_t d = std::popcount(g.neighbors(v) & nb);
        m += d;
        sharing += d * (d - 1) / 2;
    }
    assert(m % 2 == 0);
    m /= 2;
    return m * (m - 1) / 2 - sharing;
}

struct EmbeddingOrder {
    std::vector<int> verts;             // pattern vertices in placement order
    std::vector<VertexSet> back_edges;  // neighbors among earlier placed (as pattern masks)
};

EmbeddingOrder make_embedding_order(const Graph& pat) {
    const int k = pat.order();
    EmbeddingOrder ord;
    VertexSet placed = 0;
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed & bit(v)) continue;
            int links = std::popcount(pat.neighbors(v) & placed);
            int deg = pat.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        ord.verts.push_back(best);
        ord.back_edges.push_back(pat.neighbors(best) & placed);
        placed |= bit(best);
    }
    return ord;
}

// DFS over injective maps; returns embedding count, or stops at 1 when
// existence_only. Counts fit in uint64: at most 64!/54! for order <= 10.
std::uint64_t embeddings_rec(const Graph& host, const Graph& pat, const EmbeddingOrder& ord,
                             std::vector<int>& image, int step, VertexSet used,
                             bool existence_only) {
    const int k = pat.order();
    if (step == k) return 1;
    const int pv = ord.verts[static_cast<std::size_t>(step)];
    VertexSet cand;
    if (ord.back_edges[static_cast<std::size_t>(step)] == 0) {
        cand = host.vertex_mask() & ~used;
    } else {
        cand = host.vertex_mask();
        VertexSet back = ord.back_edges[static_cast<std::size_t>(step)];
        while (back) {
            int pu = std::countr_zero(back);
            back &= back - 1;
            cand &= host.neighbors(image[static_cast<std::size_t>(pu)]);
        }
        cand &= ~used;
    }
    const int need_deg = pat.degree(pv);
    std::uint64_t total = 0;
    while (cand) {
        int hv = std::countr_zero(cand);
        cand &= cand - 1;
        if (host.degree(hv) < need_deg) continue;
        image[static_cast<std::size_t>(pv)] = hv;
        total += embeddings_rec(host, pat, ord, image, step + 1, used | bit(hv), existence_only);
        if (existence_only && total > 0) return total;
    }
    return total;
}

std::uint64_t run_embeddings(const Graph& host, const Graph& pat, bool existence_only) {
    if (pat.order() > host.order()) return 0;
    if (pat.order() == 0) return 1;
    EmbeddingOrder ord = make_embedding_order(pat);
    std::vector<int> image(static_cast<std::size_t>(pat.order()), -1);
    return embeddings_rec(host, pat, ord, image, 0, 0, existence_only);
}

bool k_colorable(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // colors are interchangeable: vertex i may only open color max_used+1
    auto rec = [&](auto&& self, int i, int used) -> bool {
        if (i == n) return true;
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            VertexSet nb = g.neighbors(i);
            while (nb && ok) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (u < i && color[static_cast<std::size_t>(u)] == c) ok = false;
            }
            if (!ok) continue;
            color[static_cast<std::size_t>(i)] = c;
            if (self(self, i + 1, std::max(used, c + 1))) return true;
            color[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace

BigInt count_double_star_edge(const Graph& g, int u, int v, const DoubleStarParams& p) {
    if (!g.has_edge(u, v))
        throw ArgumentError("count_double_star_edge: {" + std::to_string(u) + "," +
                            std::to_string(v) + "} is not an edge");
    const VertexSet x = g.neighbors(u) & ~bit(v);
    const VertexSet y = g.neighbors(v) & ~bit(u);
    const int xs = std::popcount(x);
    const int ys = std::popcount(y);
    const int t = std::popcount(x & y);

    auto one_side = [&](int a, int b) {
        BigInt total = 0;
        for (int j = 0; j <= std::min(a, t); ++j)
            total += binomial(t, j) * binomial(xs - t, a - j) * binomial(ys - j, b);
        return total;
    };
    if (p.a == p.b) return one_side(p.a, p.b);
    return one_side(p.a, p.b) + one_side(p.b, p.a);
}

BigInt count_pattern(const Graph& host, const Pattern& pattern) {
    if (auto* p = pattern.get_if<DoubleStarParams>()) {
        BigInt total = 0;
        for (auto [u, v] : host.edge_list()) total += count_double_star_edge(host, u, v, *p);
        return total;
    }
    if (auto* p = pattern.get_if<CliqueParams>())
        return BigInt(clique_count_rec(host, host.vertex_mask(), p->k));
    if (auto* p = pattern.get_if<BookParams>()) {
        // base edge + t common neighbors; a triangle (t = 1) has 3 base edges
        BigInt total = 0;
        for (auto [u, v] : host.edge_list())
            total += binomial(host.common_neighbor_count(u, v), p->t);
        if (p->t == 1) {
            assert(total % 3 == 0);
            total /= 3;
        }
        return total;
    }
    if (pattern.get_if<Fan2Params>()) {
        BigInt total = 0;
        for (int x = 0; x < host.order(); ++x)
            total += disjoint_edge_pairs_in_neighborhood(host, x);
        return total;
    }
    if (auto* p = pattern.get_if<CompleteBipartiteParams>()) {
        BigInt total = kbip_count_rec(host, host.vertex_mask(), 0, p->s, p->t);
        if (p->s == p->t) {
            assert(total % 2 == 0);
            total /= 2;
        }
        return total;
    }
    const Graph& pg = pattern.get_if<GenericParams>()->graph;
    BigInt embeddings(run_embeddings(host, pg, false));
    BigInt aut = pattern.automorphism_count();
    assert(embeddings % aut == 0);
    return embeddings / aut;
}

bool contains_pattern(const Graph& host, const Pattern& pattern) {
    if (pattern.order() > host.order()) return false;
    if (auto* p = pattern.get_if<DoubleStarParams>()) {
        for (auto [u, v] : host.edge_list()) {
            const int xs = host.degree(u) - 1;
            const int ys = host.degree(v) - 1;
            const int t = host.common_neighbor_count(u, v);
            if (xs + ys - t < p->a + p->b) continue;
            if ((xs >= p->a && ys >= p->b) || (xs >= p->b && ys >= p->a)) return true;
        }
        return false;
    }
    if (auto* p = pattern.get_if<CliqueParams>())
        return clique_exists_rec(host, host.vertex_mask(), p->k);
    if (auto* p = pattern.get_if<BookParams>()) {
        for (auto [u, v] : host.edge_list())
            if (host.common_neighbor_count(u, v) >= p->t) return true;
        return false;
    }
    if (pattern.get_if<Fan2Params>()) {
        for (int x = 0; x < host.order(); ++x)
            if (disjoint_edge_pairs_in_neighborhood(host, x) > 0) return true;
        return false;
    }
    if (auto* p = pattern.get_if<CompleteBipartiteParams>())
        return kbip_exists_rec(host, host.vertex_mask(), 0, p->s, p->t);
    return run_embeddings(host, pattern.get_if<GenericParams>()->graph, true) > 0;
}

BigInt count_embeddings(const Graph& host, const Graph& pattern) {
    if (pattern.order() > 10)
        throw CapacityError("count_embeddings: pattern order " + std::to_string(pattern.order()) +
                            " exceeds the limit of 10");
    return BigInt(run_embeddings(host, pattern, false));
}

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > 10)
        throw CapacityError("chromatic_number: order " + std::to_string(n) +
                            " exceeds the limit of 10");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int k = 2; k < n; ++k)
        if (k_colorable(g, k)) return k;
    return n;
}

std::vector<std::pair<int, int>> color_critical_edges(const Graph& g) {
    if (g.edge_count() == 0) throw ArgumentError("color_critical_edges: graph has no edges");
    const int chi = chromatic_number(g);
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edge_list()) {
        Graph h = g;
        h.remove_edge(u, v);
        if (chromatic_number(h) < chi) out.emplace_back(u, v);
    }
    return out;
}

} // namespace turanlab
