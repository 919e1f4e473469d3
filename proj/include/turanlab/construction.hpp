#pragma once

#include "turanlab/graph.hpp"

#include <string>
#include <variant>
#include <vector>

namespace turanlab {

// Generators for the extremal configurations the library audits against.
// CLI grammar:
//   kbipartite:m,k    K_{m,k}
//   kbipartite+:m,k   K_{m,k} plus one edge inside the size-m part (m >= 2)
//   multipartite:p1,p2,...
//   cliques+rem:n,s   floor(n/s) disjoint K_s plus one K_{n mod s}
//   cliques:n,s       floor(n/s) disjoint K_s plus isolated leftovers
//   regtf:n,d         d-regular triangle-free graph on n vertices
struct CompleteBipartiteSpec {
    int m = 0, k = 0;
    bool operator==(const CompleteBipartiteSpec&) const = default;
};
struct CompleteBipartitePlusSpec {
    int m = 0, k = 0;
    bool operator==(const CompleteBipartitePlusSpec&) const = default;
};
struct CompleteMultipartiteSpec {
    std::vector<int> parts;
    bool operator==(const CompleteMultipartiteSpec&) const = default;
};
struct CliquesPlusRemainderSpec {
    int n = 0, s = 0;
    bool operator==(const CliquesPlusRemainderSpec&) const = default;
};
struct DisjointCliquesSpec {
    int n = 0, s = 0;
    bool operator==(const DisjointCliquesSpec&) const = default;
};
struct RegularTriangleFreeSpec {
    int n = 0, d = 0;
    bool operator==(const RegularTriangleFreeSpec&) const = default;
};

class ConstructionSpec {
public:
    using Storage = std::variant<CompleteBipartiteSpec, CompleteBipartitePlusSpec,
                                 CompleteMultipartiteSpec, CliquesPlusRemainderSpec,
                                 DisjointCliquesSpec, RegularTriangleFreeSpec>;

    static ConstructionSpec complete_bipartite(int m, int k);
    static ConstructionSpec complete_bipartite_plus(int m, int k);
    static ConstructionSpec complete_multipartite(std::vector<int> parts);
    static ConstructionSpec cliques_plus_remainder(int n, int s);
    static ConstructionSpec disjoint_cliques(int n, int s);
    static ConstructionSpec regular_triangle_free(int n, int d);

    static ConstructionSpec parse(const std::string& text);
    std::string to_string() const;

    template <typename T>
    const T* get_if() const {
        return std::get_if<T>(&storage_);
    }

    Graph build() const;

    bool operator==(const ConstructionSpec&) const = default;

private:
    explicit ConstructionSpec(Storage s) : storage_(std::move(s)) {}
    Storage storage_;
};

// Direct form used by the audits. Even n: bipartite circulant (left i joined
// to right i, i+1, ..., i+d-1 mod n/2). Odd n: C_n for d=2 (n >= 5), the
// edgeless graph for d=0, otherwise a d-regular graph on n-1 vertices plus
// one isolated vertex (the fallback needs d even, which d*n even forces).
Graph build_regular_triangle_free(int n, int d);

} // namespace turanlab
