#pragma once

#include "turanlab/bigint.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/pattern.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace turanlab {

struct ExtremalRecord {
    int n = 0;
    std::string pattern;    // Pattern::to_string of H
    std::string forbidden;  // Pattern::to_string of F
    BigInt value;
    std::vector<std::string> witnesses; // canonical graph6, sorted, truncated
    bool witnesses_truncated = false;
    enum class Method { exhaustive, stochastic } method = Method::exhaustive;
    std::uint64_t graphs_enumerated = 0;
    std::int64_t elapsed_ms = 0;
};

nlohmann::json record_to_json(const ExtremalRecord& rec);

struct OracleOptions {
    int threads = 1;
    int witness_limit = 16;
};

// One canonical representative per isomorphism class of F-free graphs on n
// vertices (F = nullopt means all graphs). Vertex augmentation with a
// conservative canonical-deletion parent filter plus canonical-key dedup;
// list order is deterministic and thread-count independent. n <= 10.
std::vector<Graph> enumerate_forbidden_free(int n, const std::optional<Pattern>& forbidden,
                                            int threads = 1);

inline std::vector<Graph> enumerate_all_graphs(int n, int threads = 1) {
    return enumerate_forbidden_free(n, std::nullopt, threads);
}

// Exact ex(n,H,F): maximum count_pattern(G,H) over all F-free classes, with
// every maximizer recorded (up to options.witness_limit).
ExtremalRecord ex_exhaustive(int n, const Pattern& h, const Pattern& f,
                             const OracleOptions& options = {});

// Seeded hill-climbing lower bound for n beyond exhaustive reach (n <= 64).
// Starts from the known constructions (filtered F-free) and random greedy
// graphs; moves are edge add/remove/swap, never creating F. Deterministic
// given (seed, budget); runs a single chain, so threads do not affect it.
ExtremalRecord ex_stochastic(int n, const Pattern& h, const Pattern& f, std::uint64_t seed,
                             std::uint64_t budget, const OracleOptions& options = {});

} // namespace turanlab
