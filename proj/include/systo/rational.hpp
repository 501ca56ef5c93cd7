#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "systo/types.hpp"

namespace systo {

/// Exact rational scalar for barycentric coefficients and squared
/// distances.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) { return r.str(); }

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

/// r^e for e >= 0.
Rational rational_pow(const Rational& r, int e);

}  // namespace systo
