#pragma once

#include "turanlab/bigint.hpp"
#include "turanlab/graph.hpp"

#include <string>
#include <variant>

namespace turanlab {

// Double star S_{a,b}: an edge uv plus a pendant leaves at u and b at v.
// Stored normalized with a <= b.
struct DoubleStarParams {
    int a = 1;
    int b = 1;
    bool operator==(const DoubleStarParams&) const = default;
};

DoubleStarParams make_double_star(int a, int b); // validates a,b >= 1, normalizes

struct CliqueParams {
    int k = 2;
    bool operator==(const CliqueParams&) const = default;
};

struct BookParams {
    int t = 1; // t triangles sharing one edge
    bool operator==(const BookParams&) const = default;
};

// Two triangles sharing exactly one vertex (5 vertices, 6 edges).
struct Fan2Params {
    bool operator==(const Fan2Params&) const = default;
};

struct CompleteBipartiteParams {
    int s = 1;
    int t = 1; // normalized s <= t
    bool operator==(const CompleteBipartiteParams&) const = default;
};

struct GenericParams {
    Graph graph; // order 1..10
    bool operator==(const GenericParams&) const = default;
};

// A small graph to count or forbid. Parsed from / printed as:
//   dstar:a,b | clique:k | book:t | fan2 | kbip:s,t | g6:<graph6>
class Pattern {
public:
    using Storage = std::variant<DoubleStarParams, CliqueParams, BookParams, Fan2Params,
                                 CompleteBipartiteParams, GenericParams>;

    static Pattern double_star(int a, int b);
    static Pattern clique(int k);
    static Pattern book(int t);
    static Pattern fan2();
    static Pattern complete_bipartite(int s, int t);
    static Pattern generic(Graph g);

    static Pattern parse(const std::string& text);
    std::string to_string() const;

    const Storage& storage() const { return storage_; }

    template <typename T>
    const T* get_if() const {
        return std::get_if<T>(&storage_);
    }

    int order() const;
    Graph as_graph() const;
    BigInt automorphism_count() const;

    bool operator==(const Pattern&) const = default;

private:
    explicit Pattern(Storage s) : storage_(std::move(s)) {}
    Storage storage_;
};

} // namespace turanlab
