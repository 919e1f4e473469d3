#include "turanlab/matching.hpp"

#include "turanlab/error.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <queue>

namespace turanlab {

namespace {

// dp over vertex subsets: matching number of the induced subgraph.
// States keyed by mask; the lowest vertex is either unmatched or matched to
// one of its neighbors.
int matching_dp(const Graph& g) {
    const int n = g.order();
    assert(n <= 20);
    std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
    auto solve = [&](auto&& self, VertexSet mask) -> int {
        if (mask == 0) return 0;
        std::int8_t& slot = memo[mask];
        if (slot >= 0) return slot;
        int v = std::countr_zero(mask);
        int best = self(self, mask & ~bit(v));
        VertexSet nb = g.neighbors(v) & mask;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            best = std::max(best, 1 + self(self, mask & ~bit(v) & ~bit(u)));
        }
        slot = static_cast<std::int8_t>(best);
        return best;
    };
    return solve(solve, g.vertex_mask());
}

// Classic O(V^3) blossom search; returns match[] with match[v] = partner or -1.
std::vector<int> blossom_match(const Graph& g) {
    const int n = g.order();
    std::vector<int> match(static_cast<std::size_t>(n), -1);
    std::vector<int> p(static_cast<std::size_t>(n)), base(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n)), blossom(static_cast<std::size_t>(n));

    auto lca = [&](int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = p[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = p[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
            blossom[static_cast<std::size_t>(
                base[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])])] = 1;
            p[static_cast<std::size_t>(v)] = child;
            child = match[static_cast<std::size_t>(v)];
            v = p[static_cast<std::size_t>(child)];
        }
    };

    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            VertexSet nb = g.neighbors(v);
            while (nb) {
                int to = std::countr_zero(nb);
                nb &= nb - 1;
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<std::size_t>(to)] != -1 &&
                     p[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    // odd cycle: contract the blossom
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[static_cast<std::size_t>(to)] == -1) {
                    p[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1) return to;
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = 1;
                    q.push(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[static_cast<std::size_t>(v)] != -1) continue;
        int u = find_path(v);
        while (u != -1) {
            int pv = p[static_cast<std::size_t>(u)];
            int ppv = match[static_cast<std::size_t>(pv)];
            match[static_cast<std::size_t>(u)] = pv;
            match[static_cast<std::size_t>(pv)] = u;
            u = ppv;
        }
    }
    return match;
}

// Maximum independent set by branch and bound: vertices of induced degree
// <= 1 are always safe to take; otherwise branch on a max-degree vertex.
int mis_size(const Graph& g, VertexSet mask) {
    int taken = 0;
    for (;;) {
        if (mask == 0) return taken;
        bool reduced = false;
        VertexSet scan = mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            VertexSet nb = g.neighbors(v) & mask;
            int d = std::popcount(nb);
            if (d <= 1) {
                ++taken;
                mask &= ~(nb | bit(v));
                reduced = true;
                break;
            }
        }
        if (reduced) continue;
        // branch: max-degree vertex in or out
        int pick = -1, best_d = -1;
        scan = mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(g.neighbors(v) & mask);
            if (d > best_d) {
                best_d = d;
                pick = v;
            }
        }
        int with = 1 + mis_size(g, mask & ~(g.neighbors(pick) | bit(pick)));
        int without = mis_size(g, mask & ~bit(pick));
        return taken + std::max(with, without);
    }
}

// Same search but reconstructing one witness set.
VertexSet mis_set(const Graph& g, VertexSet mask) {
    VertexSet taken = 0;
    for (;;) {
        if (mask == 0) return taken;
        bool reduced = false;
        VertexSet scan = mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            VertexSet nb = g.neighbors(v) & mask;
            if (std::popcount(nb) <= 1) {
                taken |= bit(v);
                mask &= ~(nb | bit(v));
                reduced = true;
                break;
            }
        }
        if (reduced) continue;
        int pick = -1, best_d = -1;
        scan = mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(g.neighbors(v) & mask);
            if (d > best_d) {
                best_d = d;
                pick = v;
            }
        }
        VertexSet with = mis_set(g, mask & ~(g.neighbors(pick) | bit(pick)));
        VertexSet without = mis_set(g, mask & ~bit(pick));
        if (std::popcount(with) + 1 >= std::popcount(without))
            return taken | bit(pick) | with;
        return taken | without;
    }
}

} // namespace

int max_matching_size(const Graph& g) {
    if (g.order() <= 20) return matching_dp(g);
    const auto match = blossom_match(g);
    int matched = 0;
    for (int v : match)
        if (v != -1) ++matched;
    return matched / 2;
}

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    const auto match = blossom_match(g);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.order(); ++v) {
        int u = match[static_cast<std::size_t>(v)];
        if (u > v) edges.emplace_back(v, u);
    }
    return edges;
}

int min_vertex_cover_size(const Graph& g) { return g.order() - mis_size(g, g.vertex_mask()); }

std::vector<int> min_vertex_cover(const Graph& g) {
    VertexSet independent = mis_set(g, g.vertex_mask());
    std::vector<int> cover;
    for (int v = 0; v < g.order(); ++v)
        if (!(independent & bit(v))) cover.push_back(v);
    assert(static_cast<int>(cover.size()) == min_vertex_cover_size(g));
    return cover;
}

StarOrMatching star_or_matching_lower_bound(const Graph& g) {
    const int n = g.order();
    int delta = 0, center = -1;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d > delta) {
            delta = d;
            center = v;
        }
    }
    auto matching = maximum_matching(g);
    const int nu = static_cast<int>(matching.size());
    if (nu != max_matching_size(g)) throw Error("internal: matching size disagreement");

    StarOrMatching out;
    if (delta >= nu) {
        out.kind = StarOrMatching::Kind::star;
        out.size = delta;
        if (center != -1) {
            VertexSet nb = g.neighbors(center);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                out.witness.emplace_back(std::min(center, u), std::max(center, u));
            }
        }
    } else {
        out.kind = StarOrMatching::Kind::matching;
        out.size = nu;
        out.witness = std::move(matching);
    }
    return out;
}

} // namespace turanlab
