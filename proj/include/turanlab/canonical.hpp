#pragma once

#include "turanlab/graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace turanlab {

// Total order on isomorphism classes: byte 0 is the order n, then the
// canonical adjacency matrix's lower triangle packed row by row. Two graphs
// are isomorphic iff their keys are equal.
struct CanonicalKey {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalLabeling {
    CanonicalKey key;
    Graph form;              // the canonical representative itself
    std::vector<int> order;  // order[i] = original vertex placed at slot i
};

CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

// Independent brute-force isomorphism check (used to cross-validate the
// canonical form in tests). Returns a mapping a-vertex -> b-vertex if one
// exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

} // namespace turanlab
