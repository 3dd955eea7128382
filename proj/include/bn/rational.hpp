#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

// Exact arithmetic used throughout the engine.  Counts involve products of
// factorials that overflow 64-bit integers already at desk scale, so every
// coefficient is an arbitrary-precision rational.

namespace bn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

// 1/n! with the convention 1/n! = 0 for n < 0.  This is what makes the
// factorial-Vandermonde determinant identities below hold uniformly.
inline Rational inv_factorial(long n) {
    if (n < 0) return Rational(0);
    return Rational(1, factorial(n));
}

inline Int rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rational_den(q) == 1; }

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return rational_num(q).str();
    return rational_num(q).str() + "/" + rational_den(q).str();
}

}  // namespace bn
