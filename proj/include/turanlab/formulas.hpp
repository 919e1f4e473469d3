#pragma once

#include "turanlab/bigint.hpp"
#include "turanlab/pattern.hpp"

namespace turanlab {

// f(x,y): copies of S_{a,b} with a fixed central edge whose endpoints have
// degrees x and y in a triangle-free host. Single product when a = b.
BigInt f_value(int x, int y, const DoubleStarParams& p);

// Copies of S_{a,b} in K_{m,n-m}: m(n-m) * f(m, n-m). Needs 1 <= m <= n-1.
BigInt count_in_complete_bipartite(int m, int n, const DoubleStarParams& p);

struct BipartiteOptimum {
    int m = 0;
    BigInt value;
    bool operator==(const BipartiteOptimum&) const = default;
};

// argmax over 1 <= m <= n/2 of count_in_complete_bipartite; ties -> smaller m.
BipartiteOptimum best_complete_bipartite(int n, const DoubleStarParams& p);

// argmax over 2 <= m <= n-2 of the S_{a,b} count in K_{m,n-m} plus one edge
// in the m-part, computed by the counting engine on the built graph (the
// extra edge breaks the part symmetry, so the scan covers the full range).
BipartiteOptimum best_complete_bipartite_plus(int n, const DoubleStarParams& p);

// p*C(a+b+1,k) + C(q,k) where n = p*(a+b+1) + q, 0 <= q <= a+b. Needs k >= 3.
BigInt klikks_value(int n, int k, const DoubleStarParams& p);

// The rate constant of the double-star-vs-double-star bounds: the max of a
// clique term and a regular term, each halved when a = b. "nice" means the
// regular term attains the max.
struct RValue {
    Rational r;
    bool nice = false;
    Rational clique_term;
    Rational regular_term;
};

// Needs 1 <= c <= a <= b < d.
RValue r_value(int a, int b, int c, int d);

// Exact optimum when forbidding S_{c,d} with a < c: the S_{a,b} count of
// K_{c,n-c}. Needs a < c and n > c.
BigInt cnc_value(int n, const DoubleStarParams& p, int c);

} // namespace turanlab
