#pragma once

#include "turanlab/bigint.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/pattern.hpp"

#include <utility>
#include <vector>

namespace turanlab {

// Copies of the double star S_{a,b} whose central edge is exactly {u,v}.
// uv must be an edge. With X = N(u)\{v}, Y = N(v)\{u} and t = |X ∩ Y|, one
// orientation contributes sum_j C(t,j) C(|X|-t, a-j) C(|Y|-j, b); both
// orientations are added unless a == b (the copy is the same either way).
BigInt count_double_star_edge(const Graph& g, int u, int v, const DoubleStarParams& p);

// Number of subgraphs of `host` isomorphic to the pattern (labeled copies
// divided by automorphisms). Exact.
BigInt count_pattern(const Graph& host, const Pattern& pattern);

// Existence check; much faster than count_pattern > 0 on the hot kinds.
bool contains_pattern(const Graph& host, const Pattern& pattern);

// Injective homomorphisms pattern -> host (labeled embeddings). The generic
// fallback engine; count_pattern(generic) = this / |Aut|.
BigInt count_embeddings(const Graph& host, const Graph& pattern);

// Exact chromatic number by backtracking; order <= 10 (CapacityError above).
int chromatic_number(const Graph& g);

// Edges whose removal drops the chromatic number. Needs at least one edge.
std::vector<std::pair<int, int>> color_critical_edges(const Graph& g);

} // namespace turanlab
