#pragma once

#include "turanlab/graph.hpp"

#include <utility>
#include <vector>

namespace turanlab {

// Size of a maximum matching. Small orders (n <= 20) run a subset-DP that is
// independent of the blossom code; larger orders use the blossom algorithm.
int max_matching_size(const Graph& g);

// Maximum matching as an edge list (blossom algorithm, general graphs).
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

// Size of a minimum vertex cover (exact branch-and-bound via maximum
// independent set).
int min_vertex_cover_size(const Graph& g);

// One witness of a minimum vertex cover.
std::vector<int> min_vertex_cover(const Graph& g);

// max(Delta, nu) with a witness: either the edges of a largest star or a
// maximum matching. Ties prefer the star.
struct StarOrMatching {
    enum class Kind { star, matching };
    Kind kind;
    int size;
    std::vector<std::pair<int, int>> witness;
};

StarOrMatching star_or_matching_lower_bound(const Graph& g);

} // namespace turanlab
