#include "turanlab/canonical.hpp"

#include "turanlab/error.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>

namespace turanlab {

namespace {

// Equitable-ish refinement: start from degree cells (ascending), split each
// cell by the vector of neighbor counts into current cells until stable.
// Cell order depends only on isomorphism invariants, so isomorphic graphs
// get corresponding partitions.
std::vector<std::vector<int>> refine_partition(const Graph& g) {
    const int n = g.order();
    std::map<int, std::vector<int>> by_deg;
    for (int v = 0; v < n; ++v) by_deg[g.degree(v)].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& [d, vs] : by_deg) cells.push_back(std::move(vs));

    for (;;) {
        std::vector<int> cell_of(static_cast<std::size_t>(n));
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            for (int v : cells[static_cast<std::size_t>(c)])
                cell_of[static_cast<std::size_t>(v)] = c;

        bool changed = false;
        std::vector<std::vector<int>> next;
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                VertexSet nb = g.neighbors(v);
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
                }
                split[std::move(sig)].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, vs] : split) next.push_back(std::move(vs));
        }
        cells = std::move(next);
        if (!changed) break;
    }
    return cells;
}

struct Canonizer {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> cells;
    std::vector<int> slot_cell;            // slot -> cell supplying it
    std::vector<std::uint64_t> rows;       // rows[r]: adjacency of slot r vs slots <r, MSB-first
    std::vector<std::uint64_t> best_rows;  // current minimum (all-ones before first leaf)
    std::vector<int> order, best_order;
    VertexSet used = 0;

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.order()) {
        cells = refine_partition(g);
        slot_cell.reserve(static_cast<std::size_t>(n));
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            for (std::size_t i = 0; i < cells[static_cast<std::size_t>(c)].size(); ++i)
                slot_cell.push_back(c);
        rows.assign(static_cast<std::size_t>(n), 0);
        // rows never reach all-ones (bit 0 is never used), so all-ones acts
        // as "+infinity" until the first leaf replaces it
        best_rows.assign(static_cast<std::size_t>(n), ~std::uint64_t{0});
        order.assign(static_cast<std::size_t>(n), -1);
        best_order = order;
    }

    // Invariant on entry: rows[0..slot-1] == best_rows[0..slot-1]. A strictly
    // better prefix kills the incumbent, so best_rows past it resets to the
    // all-ones sentinel; any leaf reached therefore realizes best_rows exactly.
    void dfs(int slot) {
        if (slot == n) {
            best_order = order;
            return;
        }
        const auto& cell = cells[static_cast<std::size_t>(slot_cell[static_cast<std::size_t>(slot)])];
        std::vector<int> tried;
        for (int v : cell) {
            if (used & bit(v)) continue;
            // skip twins of a candidate already tried at this slot: swapping
            // them is an automorphism fixing everything else, so the subtree
            // repeats verbatim
            bool twin = false;
            for (int w : tried) {
                VertexSet keep = ~(bit(v) | bit(w));
                if ((g.neighbors(v) & keep) == (g.neighbors(w) & keep)) {
                    twin = true;
                    break;
                }
            }
            tried.push_back(v);
            if (twin) continue;

            std::uint64_t row = 0;
            for (int i = 0; i < slot; ++i)
                if (g.neighbors(v) & bit(order[static_cast<std::size_t>(i)]))
                    row |= std::uint64_t{1} << (63 - i);
            if (row > best_rows[static_cast<std::size_t>(slot)]) continue;
            if (row < best_rows[static_cast<std::size_t>(slot)]) {
                best_rows[static_cast<std::size_t>(slot)] = row;
                for (int s = slot + 1; s < n; ++s)
                    best_rows[static_cast<std::size_t>(s)] = ~std::uint64_t{0};
            }
            rows[static_cast<std::size_t>(slot)] = row;
            order[static_cast<std::size_t>(slot)] = v;
            used |= bit(v);
            dfs(slot + 1);
            used &= ~bit(v);
        }
    }
};

CanonicalKey pack_key(const Graph& form) {
    const int n = form.order();
    CanonicalKey key;
    key.bytes.push_back(static_cast<std::uint8_t>(n));
    int acc = 0, nbits = 0;
    for (int r = 1; r < n; ++r) {
        for (int c = 0; c < r; ++c) {
            acc = (acc << 1) | (form.has_edge(r, c) ? 1 : 0);
            if (++nbits == 8) {
                key.bytes.push_back(static_cast<std::uint8_t>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) key.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return key;
}

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    const int n = g.order();
    CanonicalLabeling out;
    if (n == 0) {
        out.key.bytes.push_back(0);
        out.form = Graph(0);
        return out;
    }
    Canonizer cz(g);
    cz.dfs(0);
    assert(cz.best_order[0] != -1);
    out.order = cz.best_order;
    // perm maps original vertex -> canonical slot
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int slot = 0; slot < n; ++slot)
        perm[static_cast<std::size_t>(out.order[static_cast<std::size_t>(slot)])] = slot;
    out.form = g.permuted(perm);
    out.key = pack_key(out.form);
    return out;
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

CanonicalKey canonical_key(const Graph& g) { return canonical_labeling(g).key; }

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> taken(static_cast<std::size_t>(n), false);

    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int v = 0; v < n; ++v) {
            if (taken[static_cast<std::size_t>(v)]) continue;
            if (a.degree(i) != b.degree(v)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(v, map[static_cast<std::size_t>(j)])) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(i)] = v;
            taken[static_cast<std::size_t>(v)] = true;
            if (self(self, i + 1)) return true;
            taken[static_cast<std::size_t>(v)] = false;
            map[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    };
    if (dfs(dfs, 0)) return map;
    return std::nullopt;
}

} // namespace turanlab
