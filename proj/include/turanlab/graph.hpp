#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace turanlab {

// One adjacency row: bit v set <=> edge to vertex v.
using VertexSet = std::uint64_t;

// Hard representation limit (one 64-bit word per row). TURANLAB_CAP may
// lower it for a process, never raise it.
constexpr int kMaxVertices = 64;

// Effective cap for this process: TURANLAB_CAP if set (1..64), else 64.
// Parsed once; a bad value throws SpecError on first use.
int vertex_cap();

// Exposed for tests; `text` may be null (meaning "unset").
int parse_vertex_cap(const char* text);

inline VertexSet bit(int v) { return VertexSet{1} << v; }

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;
    int degree(int v) const;
    int max_degree() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    VertexSet neighbors(int v) const;
    // Mask of all n vertices (all-ones for n == 64).
    VertexSet vertex_mask() const;

    // |N(u) ∩ N(v)|; u and v need not be adjacent but must be distinct.
    int common_neighbor_count(int u, int v) const;

    std::vector<std::pair<int, int>> edge_list() const;

    // New graph with one extra vertex (index n) adjacent to `back_edges`.
    Graph with_appended_vertex(VertexSet back_edges) const;

    // New graph where old vertex v becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    bool is_triangle_free() const;
    bool is_bipartite() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v, const char* what) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

} // namespace turanlab
