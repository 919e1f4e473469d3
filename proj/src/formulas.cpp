#include "turanlab/formulas.hpp"

#include "turanlab/construction.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"

#include <string>

namespace turanlab {

BigInt f_value(int x, int y, const DoubleStarParams& p) {
    if (x < 1 || y < 1)
        throw ArgumentError("f_value: degrees must be >= 1, got x=" + std::to_string(x) +
                            " y=" + std::to_string(y));
    if (p.a == p.b) return binomial(x - 1, p.a) * binomial(y - 1, p.b);
    return binomial(x - 1, p.a) * binomial(y - 1, p.b) +
           binomial(y - 1, p.a) * binomial(x - 1, p.b);
}

BigInt count_in_complete_bipartite(int m, int n, const DoubleStarParams& p) {
    if (m < 1 || m > n - 1)
        throw ArgumentError("count_in_complete_bipartite: need 1 <= m <= n-1, got m=" +
                            std::to_string(m) + " n=" + std::to_string(n));
    return BigInt(m) * (n - m) * f_value(m, n - m, p);
}

BipartiteOptimum best_complete_bipartite(int n, const DoubleStarParams& p) {
    if (n < 2)
        throw ArgumentError("best_complete_bipartite: need n >= 2, got " + std::to_string(n));
    BipartiteOptimum best{1, count_in_complete_bipartite(1, n, p)};
    for (int m = 2; m <= n / 2; ++m) {
        BigInt v = count_in_complete_bipartite(m, n, p);
        if (v > best.value) best = {m, v};
    }
    return best;
}

BipartiteOptimum best_complete_bipartite_plus(int n, const DoubleStarParams& p) {
    if (n < 4)
        throw ArgumentError("best_complete_bipartite_plus: need n >= 4, got " + std::to_string(n));
    const Pattern h = Pattern::double_star(p.a, p.b);
    BipartiteOptimum best{0, -1};
    for (int m = 2; m <= n - 2; ++m) {
        Graph g = ConstructionSpec::complete_bipartite_plus(m, n - m).build();
        BigInt v = count_pattern(g, h);
        if (v > best.value) best = {m, v};
    }
    return best;
}

BigInt klikks_value(int n, int k, const DoubleStarParams& p) {
    if (k < 3) throw ArgumentError("klikks_value: need k >= 3, got " + std::to_string(k));
    if (n < 0) throw ArgumentError("klikks_value: need n >= 0, got " + std::to_string(n));
    const int s = p.a + p.b + 1;
    const int blocks = n / s;
    const int q = n % s;
    return BigInt(blocks) * binomial(s, k) + binomial(q, k);
}

RValue r_value(int a, int b, int c, int d) {
    if (!(1 <= c)) throw ArgumentError("r_value: need 1 <= c, got c=" + std::to_string(c));
    if (!(c <= a))
        throw ArgumentError("r_value: need c <= a, got c=" + std::to_string(c) +
                            " a=" + std::to_string(a));
    if (!(a <= b))
        throw ArgumentError("r_value: need a <= b, got a=" + std::to_string(a) +
                            " b=" + std::to_string(b));
    if (!(b < d))
        throw ArgumentError("r_value: need b < d, got b=" + std::to_string(b) +
                            " d=" + std::to_string(d));
    RValue out;
    out.clique_term =
        Rational(BigInt(c + d) * binomial(c + d - 1, a) * binomial(c + d - 1 - a, b));
    out.regular_term = Rational(BigInt(d) * binomial(d - 1, a) * binomial(d - 1, b));
    if (a == b) {
        out.clique_term /= 2;
        out.regular_term /= 2;
    }
    out.r = std::max(out.clique_term, out.regular_term);
    out.nice = (out.r == out.regular_term);
    return out;
}

BigInt cnc_value(int n, const DoubleStarParams& p, int c) {
    if (!(p.a < c))
        throw ArgumentError("cnc_value: need a < c, got a=" + std::to_string(p.a) +
                            " c=" + std::to_string(c));
    if (!(n > c))
        throw ArgumentError("cnc_value: need n > c, got n=" + std::to_string(n) +
                            " c=" + std::to_string(c));
    return count_in_complete_bipartite(c, n, p);
}

} // namespace turanlab
