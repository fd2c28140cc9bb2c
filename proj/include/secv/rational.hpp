#ifndef SECV_RATIONAL_HPP
#define SECV_RATIONAL_HPP

#include <algorithm>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "secv/errors.hpp"

namespace secv {

/// Arbitrary-precision integer. Coefficients such as a_{n,k} and d^3 overflow
/// fixed-width integers already for moderate inputs.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// Arithmetic is exact; division by zero throws std::overflow_error.
using Rational = boost::multiprecision::cpp_rational;

/// num/den as an exact rational. Throws DivisionByZero when den == 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator: " + num.str() + "/0");
    return Rational(num) / Rational(den);
}

/// Parses "p/q" or "p" (the inverse of to_string). Throws ParseError on
/// malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw ParseError("empty string is not a rational");
    try {
        return Rational(std::string(text));
    } catch (const std::exception& e) {
        throw ParseError("invalid rational \"" + std::string(text) + "\": " + e.what());
    }
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& value) {
    return value.str();
}

inline bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

/// Binomial coefficient C(n, k); zero whenever k < 0, n < 0 or k > n, so
/// formula sums can be written with unrestricted indices.
inline Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is C(n-k+i, i) at this point
    }
    return result;
}

/// 2^e for e >= 0.
inline Integer pow2(long long e) {
    return Integer(1) << e;
}

} // namespace secv

#endif
