#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace weilab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the value in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace weilab
