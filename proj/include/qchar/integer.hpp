/**
 * @file integer.hpp
 * @brief Arbitrary precision integer and rational types.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qchar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer pow2(int e) {
    Integer v = 1;
    v <<= e;
    return v;
}

inline Integer factorial(int n) {
    Integer v = 1;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

}  // namespace qchar
