#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hlag {

// Small exact rationals (thresholds, grid bounds). Values stay tiny; anything
// that mixes dyadic doubles with decimal tolerances goes through BigRat below
// so no silent wraparound is possible.
using Rat = boost::rational<long long>;

// Arbitrary-precision rationals for the strict-inequality comparisons.
using BigRat = boost::multiprecision::cpp_rational;

inline BigRat big_of(const Rat& q) {
    return BigRat(q.numerator(), q.denominator());
}

// Exact value of a finite double (doubles are dyadic rationals).
inline BigRat big_of_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
    return BigRat(v);
}

inline long long binomial_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

inline long long checked_pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > INT64_MAX / base)
            throw std::overflow_error("integer power overflow");
        r *= base;
    }
    return r;
}

inline double to_double(const Rat& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

// Fixed-point decimal rendering by long division, e.g. 10/125 -> "0.080000000000000".
std::string decimal_string(const Rat& q, int digits = 15);

}  // namespace hlag
