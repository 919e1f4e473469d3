#include "turanlab/construction.hpp"

#include "turanlab/error.hpp"

#include <cassert>
#include <numeric>

namespace turanlab {

namespace {

int parse_spec_int(const std::string& text, const std::string& context) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw SpecError(context + ": expected an integer, got \"" + text + "\"");
    }
    if (pos != text.size()) throw SpecError(context + ": trailing characters in \"" + text + "\"");
    if (v < -1000000 || v > 1000000) throw SpecError(context + ": value out of range");
    return static_cast<int>(v);
}

std::vector<int> parse_spec_ints(const std::string& text, const std::string& context) {
    std::vector<int> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string field =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parse_spec_int(field, context));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Graph build_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    // vertices laid out part by part; edges between different parts only
    int offset_u = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int offset_v = offset_u + parts[i];
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = 0; u < parts[i]; ++u)
                for (int v = 0; v < parts[j]; ++v) g.add_edge(offset_u + u, offset_v + v);
            offset_v += parts[j];
        }
        offset_u += parts[i];
    }
    return g;
}

Graph build_cliques(int n, int s, bool complete_remainder) {
    const int p = n / s;
    Graph g(n);
    for (int c = 0; c < p; ++c)
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) g.add_edge(c * s + u, c * s + v);
    if (complete_remainder) {
        for (int u = p * s; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

} // namespace

ConstructionSpec ConstructionSpec::complete_bipartite(int m, int k) {
    if (m < 0 || k < 0)
        throw SpecError("kbipartite: part sizes must be >= 0, got " + std::to_string(m) + "," +
                        std::to_string(k));
    return ConstructionSpec(CompleteBipartiteSpec{m, k});
}

ConstructionSpec ConstructionSpec::complete_bipartite_plus(int m, int k) {
    if (m < 2)
        throw SpecError("kbipartite+: the part receiving the extra edge needs m >= 2, got m=" +
                        std::to_string(m));
    if (k < 0) throw SpecError("kbipartite+: part size k must be >= 0, got " + std::to_string(k));
    return ConstructionSpec(CompleteBipartitePlusSpec{m, k});
}

ConstructionSpec ConstructionSpec::complete_multipartite(std::vector<int> parts) {
    if (parts.empty()) throw SpecError("multipartite: needs at least one part");
    for (int p : parts)
        if (p < 0) throw SpecError("multipartite: part sizes must be >= 0, got " + std::to_string(p));
    return ConstructionSpec(CompleteMultipartiteSpec{std::move(parts)});
}

ConstructionSpec ConstructionSpec::cliques_plus_remainder(int n, int s) {
    if (n < 0) throw SpecError("cliques+rem: n must be >= 0, got " + std::to_string(n));
    if (s < 1) throw SpecError("cliques+rem: clique order s must be >= 1, got " + std::to_string(s));
    return ConstructionSpec(CliquesPlusRemainderSpec{n, s});
}

ConstructionSpec ConstructionSpec::disjoint_cliques(int n, int s) {
    if (n < 0) throw SpecError("cliques: n must be >= 0, got " + std::to_string(n));
    if (s < 1) throw SpecError("cliques: clique order s must be >= 1, got " + std::to_string(s));
    return ConstructionSpec(DisjointCliquesSpec{n, s});
}

ConstructionSpec ConstructionSpec::regular_triangle_free(int n, int d) {
    if (n < 0) throw SpecError("regtf: n must be >= 0, got " + std::to_string(n));
    if (d < 0) throw SpecError("regtf: degree must be >= 0, got " + std::to_string(d));
    return ConstructionSpec(RegularTriangleFreeSpec{n, d});
}

ConstructionSpec ConstructionSpec::parse(const std::string& text) {
    std::size_t colon = text.find(':');
    std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
    std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);
    if (colon == std::string::npos || rest.empty())
        throw SpecError("construction \"" + text + "\" is missing parameters (expected kind:params)");

    auto ints = [&](std::size_t want) {
        auto v = parse_spec_ints(rest, "construction " + kind);
        if (v.size() != want)
            throw SpecError("construction " + kind + " needs exactly " + std::to_string(want) +
                            " parameters");
        return v;
    };

    if (kind == "kbipartite") {
        auto v = ints(2);
        return complete_bipartite(v[0], v[1]);
    }
    if (kind == "kbipartite+") {
        auto v = ints(2);
        return complete_bipartite_plus(v[0], v[1]);
    }
    if (kind == "multipartite")
        return complete_multipartite(parse_spec_ints(rest, "construction multipartite"));
    if (kind == "cliques+rem") {
        auto v = ints(2);
        return cliques_plus_remainder(v[0], v[1]);
    }
    if (kind == "cliques") {
        auto v = ints(2);
        return disjoint_cliques(v[0], v[1]);
    }
    if (kind == "regtf") {
        auto v = ints(2);
        return regular_triangle_free(v[0], v[1]);
    }
    throw SpecError("unknown construction kind \"" + kind +
                    "\" (expected kbipartite, kbipartite+, multipartite, cliques+rem, cliques, "
                    "or regtf)");
}

std::string ConstructionSpec::to_string() const {
    if (auto* p = get_if<CompleteBipartiteSpec>())
        return "kbipartite:" + std::to_string(p->m) + "," + std::to_string(p->k);
    if (auto* p = get_if<CompleteBipartitePlusSpec>())
        return "kbipartite+:" + std::to_string(p->m) + "," + std::to_string(p->k);
    if (auto* p = get_if<CompleteMultipartiteSpec>()) {
        std::string s = "multipartite:";
        for (std::size_t i = 0; i < p->parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p->parts[i]);
        }
        return s;
    }
    if (auto* p = get_if<CliquesPlusRemainderSpec>())
        return "cliques+rem:" + std::to_string(p->n) + "," + std::to_string(p->s);
    if (auto* p = get_if<DisjointCliquesSpec>())
        return "cliques:" + std::to_string(p->n) + "," + std::to_string(p->s);
    auto* p = get_if<RegularTriangleFreeSpec>();
    assert(p);
    return "regtf:" + std::to_string(p->n) + "," + std::to_string(p->d);
}

Graph ConstructionSpec::build() const {
    if (auto* p = get_if<CompleteBipartiteSpec>()) return build_multipartite({p->m, p->k});
    if (auto* p = get_if<CompleteBipartitePlusSpec>()) {
        Graph g = build_multipartite({p->m, p->k});
        g.add_edge(0, 1); // first two vertices of the m-part
        return g;
    }
    if (auto* p = get_if<CompleteMultipartiteSpec>()) return build_multipartite(p->parts);
    if (auto* p = get_if<CliquesPlusRemainderSpec>()) return build_cliques(p->n, p->s, true);
    if (auto* p = get_if<DisjointCliquesSpec>()) return build_cliques(p->n, p->s, false);
    auto* p = get_if<RegularTriangleFreeSpec>();
    assert(p);
    return build_regular_triangle_free(p->n, p->d);
}

Graph build_regular_triangle_free(int n, int d) {
    if (n < 0 || d < 0) throw SpecError("regtf: n and d must be >= 0");
    if (d == 0) return Graph(n);
    if ((static_cast<long long>(d) * n) % 2 != 0)
        throw SpecError("regtf: infeasible, d*n is odd (d=" + std::to_string(d) +
                        ", n=" + std::to_string(n) + ")");
    if (n % 2 == 0) {
        if (d > n / 2)
            throw SpecError("regtf: bipartite circulant needs d <= n/2, got d=" + std::to_string(d) +
                            " for n=" + std::to_string(n));
        const int h = n / 2;
        Graph g(n);
        for (int i = 0; i < h; ++i)
            for (int r = 0; r < d; ++r) g.add_edge(i, h + (i + r) % h);
        assert(g.is_triangle_free());
        return g;
    }
    // odd n: a 2-regular triangle-free graph is just C_n (n >= 5); anything
    // else falls back to n-1 vertices plus an isolated vertex
    if (d == 2) {
        if (n < 5)
            throw SpecError("regtf: no triangle-free cycle on " + std::to_string(n) + " vertices");
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }
    assert(d % 2 == 0); // d*n even with n odd forces d even
    if (d > (n - 1) / 2)
        throw SpecError("regtf: fallback on n-1=" + std::to_string(n - 1) +
                        " vertices needs d <= " + std::to_string((n - 1) / 2) + ", got d=" +
                        std::to_string(d));
    Graph g = build_regular_triangle_free(n - 1, d);
    return g.with_appended_vertex(0);
}

} // namespace turanlab
