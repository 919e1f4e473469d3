#include "turanlab/graph.hpp"

#include "turanlab/error.hpp"

#include <bit>
#include <cassert>
#include <cstdlib>
#include <string>

namespace turanlab {

int parse_vertex_cap(const char* text) {
    if (text == nullptr) return kMaxVertices;
    std::string s(text);
    std::size_t pos = 0;
    long v = -1;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw SpecError("TURANLAB_CAP is not an integer: \"" + s + "\"");
    }
    if (pos != s.size())
        throw SpecError("TURANLAB_CAP has trailing characters: \"" + s + "\"");
    if (v < 1 || v > kMaxVertices)
        throw SpecError("TURANLAB_CAP must be in [1," + std::to_string(kMaxVertices) +
                        "], got " + s + " (adjacency rows are single 64-bit words)");
    return static_cast<int>(v);
}

int vertex_cap() {
    static const int cap = parse_vertex_cap(std::getenv("TURANLAB_CAP"));
    return cap;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw ArgumentError("graph order must be >= 0, got " + std::to_string(n));
    if (n > vertex_cap())
        throw CapacityError("graph order " + std::to_string(n) + " exceeds vertex cap " +
                            std::to_string(vertex_cap()));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw ArgumentError(std::string(what) + " vertex " + std::to_string(v) +
                            " out of range [0," + std::to_string(n_) + ")");
}

int Graph::edge_count() const {
    int total = 0;
    for (VertexSet row : adj_) total += std::popcount(row);
    assert(total % 2 == 0);
    return total / 2;
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::max_degree() const {
    int best = 0;
    for (VertexSet row : adj_) best = std::max(best, std::popcount(row));
    return best;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, "edge");
    check_vertex(v, "edge");
    return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "edge");
    check_vertex(v, "edge");
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u, "edge");
    check_vertex(v, "edge");
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::vertex_mask() const {
    if (n_ == 0) return 0;
    if (n_ == kMaxVertices) return ~VertexSet{0};
    return (VertexSet{1} << n_) - 1;
}

int Graph::common_neighbor_count(int u, int v) const {
    check_vertex(u, "common_neighbor_count");
    check_vertex(v, "common_neighbor_count");
    if (u == v) throw ArgumentError("common_neighbor_count needs distinct vertices");
    return std::popcount(adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        VertexSet higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

Graph Graph::with_appended_vertex(VertexSet back_edges) const {
    Graph g(n_ + 1); // cap check happens here
    g.adj_ = adj_;
    g.adj_.push_back(0);
    assert((back_edges & ~vertex_mask()) == 0);
    for (int u = 0; u < n_; ++u) {
        if (back_edges & bit(u)) {
            g.adj_[static_cast<std::size_t>(u)] |= bit(n_);
            g.adj_[static_cast<std::size_t>(n_)] |= bit(u);
        }
    }
    return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw ArgumentError("permutation size " + std::to_string(perm.size()) +
                            " does not match order " + std::to_string(n_));
    Graph g(n_);
    for (auto [u, v] : edge_list()) g.add_edge(perm[static_cast<std::size_t>(u)],
                                               perm[static_cast<std::size_t>(v)]);
    return g;
}

bool Graph::is_triangle_free() const {
    for (int u = 0; u < n_; ++u) {
        VertexSet higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            if (adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)]) return false;
            higher &= higher - 1;
        }
    }
    return true;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            VertexSet nb = adj_[static_cast<std::size_t>(u)];
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace turanlab
