#include "turanlab/oracle.hpp"

#include "turanlab/canonical.hpp"
#include "turanlab/construction.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"
#include "turanlab/formulas.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <utility>

namespace turanlab {

namespace {

// (degree, sorted neighbor degrees): cheap isomorphism-invariant per-vertex
// signature used by the parent filter.
std::vector<int> vertex_signature(const Graph& g, int v) {
    std::vector<int> sig{g.degree(v)};
    std::vector<int> nbr_degs;
    VertexSet nb = g.neighbors(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        nbr_degs.push_back(g.degree(u));
    }
    std::sort(nbr_degs.begin(), nbr_degs.end());
    sig.insert(sig.end(), nbr_degs.begin(), nbr_degs.end());
    return sig;
}

// Parent rule: accept a child only if the appended vertex could be the one
// the canonical parent rule deletes, i.e. its signature is minimal. Ties are
// accepted (conservative); exactness comes from the canonical-key dedup.
bool new_vertex_is_canonical_deletion(const Graph& child) {
    const int last = child.order() - 1;
    const auto last_sig = vertex_signature(child, last);
    for (int v = 0; v < last; ++v)
        if (vertex_signature(child, v) < last_sig) return false;
    return true;
}

struct TimerMs {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Construction-based starting points for the stochastic search; every
// returned graph is F-free and has exactly n vertices.
std::vector<Graph> construction_starts(int n, const Pattern& h, const Pattern& f) {
    std::vector<ConstructionSpec> specs;
    if (n >= 2) {
        specs.push_back(ConstructionSpec::complete_bipartite(n / 2, n - n / 2));
        if (auto* hp = h.get_if<DoubleStarParams>()) {
            if (n >= 2) {
                auto best = best_complete_bipartite(n, *hp);
                specs.push_back(ConstructionSpec::complete_bipartite(best.m, n - best.m));
            }
            if (n >= 4) {
                auto best = best_complete_bipartite_plus(n, *hp);
                specs.push_back(ConstructionSpec::complete_bipartite_plus(best.m, n - best.m));
            }
        }
    }
    if (auto* fp = f.get_if<DoubleStarParams>()) {
        const int s = fp->a + fp->b + 1;
        specs.push_back(ConstructionSpec::disjoint_cliques(n, s));
        specs.push_back(ConstructionSpec::cliques_plus_remainder(n, s));
        // a (d = fp->b)-regular triangle-free graph has max degree below the
        // forbidden star's big side
        const int d = fp->b;
        if (n >= 2 && static_cast<long long>(d) * n % 2 == 0 &&
            ((n % 2 == 0 && d <= n / 2) || (n % 2 == 1 && (d == 0 || (d == 2 && n >= 5) ||
                                                           (d % 2 == 0 && d <= (n - 1) / 2)))))
            specs.push_back(ConstructionSpec::regular_triangle_free(n, d));
    }
    if (auto* fp = f.get_if<CliqueParams>()) {
        // balanced complete (k-1)-partite
        const int parts = fp->k - 1;
        if (parts >= 1 && n >= parts) {
            std::vector<int> sizes(static_cast<std::size_t>(parts), n / parts);
            for (int i = 0; i < n % parts; ++i) ++sizes[static_cast<std::size_t>(i)];
            specs.push_back(ConstructionSpec::complete_multipartite(sizes));
        }
    }

    std::vector<Graph> out;
    std::set<CanonicalKey> seen;
    for (const auto& spec : specs) {
        Graph g = spec.build();
        if (g.order() != n) continue;
        if (contains_pattern(g, f)) continue;
        CanonicalKey key = canonical_key(g);
        if (seen.insert(std::move(key)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::pair<int, int>> all_vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

} // namespace

nlohmann::json record_to_json(const ExtremalRecord& rec) {
    nlohmann::json j;
    j["n"] = rec.n;
    j["pattern"] = rec.pattern;
    j["forbidden"] = rec.forbidden;
    j["value"] = to_decimal(rec.value);
    j["witnesses"] = rec.witnesses;
    j["witnesses_truncated"] = rec.witnesses_truncated;
    j["method"] = rec.method == ExtremalRecord::Method::exhaustive ? "exhaustive" : "stochastic";
    j["graphs_enumerated"] = rec.graphs_enumerated;
    j["elapsed_ms"] = rec.elapsed_ms;
    return j;
}

std::vector<Graph> enumerate_forbidden_free(int n, const std::optional<Pattern>& forbidden,
                                            int threads) {
    if (n < 0) throw ArgumentError("enumerate_forbidden_free: need n >= 0");
    if (n > 10)
        throw CapacityError("enumerate_forbidden_free: n=" + std::to_string(n) +
                            " exceeds the enumeration limit of 10");
    if (n == 0) return {Graph(0)};

    // level m holds canonical forms, one per class
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        const VertexSet mask_count = VertexSet{1} << (m - 1);
        // per-parent accepted children, merged in parent order for a
        // deterministic, schedule-independent class list
        std::vector<std::vector<std::pair<CanonicalKey, Graph>>> accepted(level.size());
        parallel_for(level.size(), threads, [&](std::size_t pi) {
            const Graph& parent = level[pi];
            for (VertexSet mask = 0; mask < mask_count; ++mask) {
                Graph child = parent.with_appended_vertex(mask);
                if (!new_vertex_is_canonical_deletion(child)) continue;
                if (forbidden && contains_pattern(child, *forbidden)) continue;
                auto lab = canonical_labeling(child);
                accepted[pi].emplace_back(std::move(lab.key), std::move(lab.form));
            }
        });
        std::set<CanonicalKey> seen;
        std::vector<Graph> next;
        for (auto& bucket : accepted)
            for (auto& [key, form] : bucket)
                if (seen.insert(std::move(key)).second) next.push_back(std::move(form));
        level = std::move(next);
    }
    return level;
}

ExtremalRecord ex_exhaustive(int n, const Pattern& h, const Pattern& f,
                             const OracleOptions& options) {
    TimerMs timer;
    const auto classes = enumerate_forbidden_free(n, f, options.threads);

    std::vector<BigInt> counts(classes.size());
    parallel_for(classes.size(), options.threads,
                 [&](std::size_t i) { counts[i] = count_pattern(classes[i], h); });

    ExtremalRecord rec;
    rec.n = n;
    rec.pattern = h.to_string();
    rec.forbidden = f.to_string();
    rec.method = ExtremalRecord::Method::exhaustive;
    rec.graphs_enumerated = classes.size();

    BigInt best = 0; // value is 0 even when no class exists (n=0 edge case)
    for (const auto& c : counts) best = std::max(best, c);
    rec.value = best;

    std::vector<std::string> winners;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (counts[i] == best) winners.push_back(graph6_encode(classes[i]));
    std::sort(winners.begin(), winners.end());
    if (static_cast<int>(winners.size()) > options.witness_limit) {
        winners.resize(static_cast<std::size_t>(options.witness_limit));
        rec.witnesses_truncated = true;
    }
    rec.witnesses = std::move(winners);
    rec.elapsed_ms = timer.elapsed();
    return rec;
}

ExtremalRecord ex_stochastic(int n, const Pattern& h, const Pattern& f, std::uint64_t seed,
                             std::uint64_t budget, const OracleOptions& options) {
    if (n < 1 || n > vertex_cap())
        throw ArgumentError("ex_stochastic: n must be in [1," + std::to_string(vertex_cap()) +
                            "], got " + std::to_string(n));
    TimerMs timer;
    std::mt19937_64 rng(seed);
    const auto pairs = all_vertex_pairs(n);
    auto starts = construction_starts(n, h, f);

    // fresh random F-free start: shuffled greedy edge insertion
    auto random_start = [&] {
        std::vector<std::size_t> order(pairs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        Graph g(n);
        for (std::size_t i : order) {
            g.add_edge(pairs[i].first, pairs[i].second);
            if (contains_pattern(g, f)) g.remove_edge(pairs[i].first, pairs[i].second);
        }
        return g;
    };

    std::uint64_t evaluations = 0;
    Graph best_graph(n);
    BigInt best_value = -1;
    const std::uint64_t restart_period = std::max<std::uint64_t>(1000, budget / 10);

    std::size_t next_start = 0;
    auto take_start = [&] {
        if (next_start < starts.size()) return starts[next_start++];
        return random_start();
    };

    Graph cur = take_start();
    BigInt cur_value = count_pattern(cur, h);
    ++evaluations;
    if (cur_value > best_value) {
        best_value = cur_value;
        best_graph = cur;
    }
    std::uint64_t since_improvement = 0;

    while (!pairs.empty() && evaluations < budget) {
        if (since_improvement >= restart_period) {
            cur = take_start();
            cur_value = count_pattern(cur, h);
            ++evaluations;
            if (cur_value > best_value) {
                best_value = cur_value;
                best_graph = cur;
            }
            since_improvement = 0;
            continue;
        }
        Graph cand = cur;
        const int kind = static_cast<int>(rng() % 3);
        const auto& p1 = pairs[rng() % pairs.size()];
        bool changed = false;
        if (kind == 0) { // add
            if (!cand.has_edge(p1.first, p1.second)) {
                cand.add_edge(p1.first, p1.second);
                changed = !contains_pattern(cand, f);
            }
        } else if (kind == 1) { // remove (never creates F)
            if (cand.has_edge(p1.first, p1.second)) {
                cand.remove_edge(p1.first, p1.second);
                changed = true;
            }
        } else { // swap
            const auto& p2 = pairs[rng() % pairs.size()];
            if (cand.has_edge(p1.first, p1.second) && !cand.has_edge(p2.first, p2.second) &&
                p1 != p2) {
                cand.remove_edge(p1.first, p1.second);
                cand.add_edge(p2.first, p2.second);
                changed = !contains_pattern(cand, f);
            }
        }
        ++since_improvement;
        if (!changed) continue;
        BigInt cand_value = count_pattern(cand, h);
        ++evaluations;
        if (cand_value >= cur_value) {
            cur = std::move(cand);
            cur_value = std::move(cand_value);
            if (cur_value > best_value) {
                best_value = cur_value;
                best_graph = cur;
                since_improvement = 0;
            }
        }
    }

    assert(!contains_pattern(best_graph, f));
    ExtremalRecord rec;
    rec.n = n;
    rec.pattern = h.to_string();
    rec.forbidden = f.to_string();
    rec.method = ExtremalRecord::Method::stochastic;
    rec.value = best_value;
    rec.witnesses = {graph6_encode(canonical_form(best_graph))};
    rec.graphs_enumerated = evaluations;
    rec.elapsed_ms = timer.elapsed();
    (void)options;
    return rec;
}

} // namespace turanlab
