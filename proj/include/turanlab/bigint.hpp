#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace turanlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient. Out-of-range k (or negative n) yields 0, which
// is the convention every counting formula here relies on.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is always a binomial prefix
    }
    return r;
}

inline std::string to_decimal(const BigInt& v) {
    return v.str();
}

// "p" when integral, "p/q" otherwise (q > 0, reduced).
inline std::string to_decimal(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1)
        return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

inline BigInt rational_floor(const Rational& v) {
    return floor_div(BigInt(boost::multiprecision::numerator(v)),
                     BigInt(boost::multiprecision::denominator(v)));
}

} // namespace turanlab
