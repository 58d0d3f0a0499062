#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rimhook {

// Exact arithmetic everywhere: character values, series coefficients and
// the orthogonality sums never touch floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int int_pow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace rimhook
