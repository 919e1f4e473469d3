#include "turanlab/pattern.hpp"

#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph6.hpp"

#include <cassert>
#include <vector>

namespace turanlab {

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

int parse_int_field(const std::string& text, const std::string& context) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw ArgumentError(context + ": expected an integer, got \"" + text + "\"");
    }
    if (pos != text.size())
        throw ArgumentError(context + ": trailing characters in \"" + text + "\"");
    if (v < -1000000 || v > 1000000) throw ArgumentError(context + ": value out of range");
    return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& context) {
    std::vector<int> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string field =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parse_int_field(field, context));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

DoubleStarParams make_double_star(int a, int b) {
    if (a < 1 || b < 1)
        throw ArgumentError("double star needs a,b >= 1, got a=" + std::to_string(a) +
                            " b=" + std::to_string(b));
    if (a > b) std::swap(a, b);
    return DoubleStarParams{a, b};
}

Pattern Pattern::double_star(int a, int b) { return Pattern(make_double_star(a, b)); }

Pattern Pattern::clique(int k) {
    if (k < 2) throw ArgumentError("clique pattern needs k >= 2, got " + std::to_string(k));
    return Pattern(CliqueParams{k});
}

Pattern Pattern::book(int t) {
    if (t < 1) throw ArgumentError("book pattern needs t >= 1, got " + std::to_string(t));
    return Pattern(BookParams{t});
}

Pattern Pattern::fan2() { return Pattern(Fan2Params{}); }

Pattern Pattern::complete_bipartite(int s, int t) {
    if (s < 1 || t < 1)
        throw ArgumentError("complete bipartite pattern needs s,t >= 1, got s=" +
                            std::to_string(s) + " t=" + std::to_string(t));
    if (s > t) std::swap(s, t);
    return Pattern(CompleteBipartiteParams{s, t});
}

Pattern Pattern::generic(Graph g) {
    if (g.order() < 1) throw ArgumentError("generic pattern must have at least one vertex");
    if (g.order() > 10)
        throw CapacityError("generic pattern order " + std::to_string(g.order()) +
                            " exceeds the limit of 10");
    return Pattern(GenericParams{std::move(g)});
}

Pattern Pattern::parse(const std::string& text) {
    std::size_t colon = text.find(':');
    std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
    std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);

    if (kind == "fan2") {
        if (colon != std::string::npos)
            throw ArgumentError("pattern fan2 takes no parameters, got \"" + text + "\"");
        return fan2();
    }
    if (colon == std::string::npos || rest.empty())
        throw ArgumentError("pattern \"" + text + "\" is missing parameters (expected kind:params)");

    if (kind == "dstar") {
        auto v = parse_int_list(rest, "pattern dstar");
        if (v.size() != 2) throw ArgumentError("pattern dstar needs exactly a,b");
        return double_star(v[0], v[1]);
    }
    if (kind == "clique") {
        auto v = parse_int_list(rest, "pattern clique");
        if (v.size() != 1) throw ArgumentError("pattern clique needs exactly k");
        return clique(v[0]);
    }
    if (kind == "book") {
        auto v = parse_int_list(rest, "pattern book");
        if (v.size() != 1) throw ArgumentError("pattern book needs exactly t");
        return book(v[0]);
    }
    if (kind == "kbip") {
        auto v = parse_int_list(rest, "pattern kbip");
        if (v.size() != 2) throw ArgumentError("pattern kbip needs exactly s,t");
        return complete_bipartite(v[0], v[1]);
    }
    if (kind == "g6") return generic(graph6_decode(rest));

    throw ArgumentError("unknown pattern kind \"" + kind +
                        "\" (expected dstar, clique, book, fan2, kbip, or g6)");
}

std::string Pattern::to_string() const {
    if (auto* p = get_if<DoubleStarParams>())
        return "dstar:" + std::to_string(p->a) + "," + std::to_string(p->b);
    if (auto* p = get_if<CliqueParams>()) return "clique:" + std::to_string(p->k);
    if (auto* p = get_if<BookParams>()) return "book:" + std::to_string(p->t);
    if (get_if<Fan2Params>()) return "fan2";
    if (auto* p = get_if<CompleteBipartiteParams>())
        return "kbip:" + std::to_string(p->s) + "," + std::to_string(p->t);
    auto* p = get_if<GenericParams>();
    assert(p);
    return "g6:" + graph6_encode(p->graph);
}

int Pattern::order() const {
    if (auto* p = get_if<DoubleStarParams>()) return p->a + p->b + 2;
    if (auto* p = get_if<CliqueParams>()) return p->k;
    if (auto* p = get_if<BookParams>()) return p->t + 2;
    if (get_if<Fan2Params>()) return 5;
    if (auto* p = get_if<CompleteBipartiteParams>()) return p->s + p->t;
    return get_if<GenericParams>()->graph.order();
}

Graph Pattern::as_graph() const {
    if (auto* p = get_if<DoubleStarParams>()) {
        // 0,1 = centers; 2..a+1 leaves at 0; a+2..a+b+1 leaves at 1
        Graph g(p->a + p->b + 2);
        g.add_edge(0, 1);
        for (int i = 0; i < p->a; ++i) g.add_edge(0, 2 + i);
        for (int i = 0; i < p->b; ++i) g.add_edge(1, 2 + p->a + i);
        return g;
    }
    if (auto* p = get_if<CliqueParams>()) {
        Graph g(p->k);
        for (int u = 0; u < p->k; ++u)
            for (int v = u + 1; v < p->k; ++v) g.add_edge(u, v);
        return g;
    }
    if (auto* p = get_if<BookParams>()) {
        Graph g(p->t + 2);
        g.add_edge(0, 1);
        for (int i = 0; i < p->t; ++i) {
            g.add_edge(0, 2 + i);
            g.add_edge(1, 2 + i);
        }
        return g;
    }
    if (get_if<Fan2Params>()) {
        Graph g(5);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(0, 3);
        g.add_edge(0, 4);
        g.add_edge(3, 4);
        return g;
    }
    if (auto* p = get_if<CompleteBipartiteParams>()) {
        Graph g(p->s + p->t);
        for (int u = 0; u < p->s; ++u)
            for (int v = 0; v < p->t; ++v) g.add_edge(u, p->s + v);
        return g;
    }
    return get_if<GenericParams>()->graph;
}

BigInt Pattern::automorphism_count() const {
    if (auto* p = get_if<DoubleStarParams>()) {
        BigInt r = factorial(p->a) * factorial(p->b);
        if (p->a == p->b) r *= 2;
        return r;
    }
    if (auto* p = get_if<CliqueParams>()) return factorial(p->k);
    if (auto* p = get_if<BookParams>()) {
        // B_1 is a triangle; beyond that only the shared edge can flip
        if (p->t == 1) return 6;
        return 2 * factorial(p->t);
    }
    if (get_if<Fan2Params>()) return 8; // swap the two triangles (2) x flip each (2x2)
    if (auto* p = get_if<CompleteBipartiteParams>()) {
        BigInt r = factorial(p->s) * factorial(p->t);
        if (p->s == p->t) r *= 2;
        return r;
    }
    const Graph& g = get_if<GenericParams>()->graph;
    return count_embeddings(g, g);
}

} // namespace turanlab
