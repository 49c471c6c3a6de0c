#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace timcoop {

/// Exact DoF values. Always kept in lowest terms with a positive denominator.
///
/// Compare only against other Rationals: with boost 1.74 under C++20 the
/// mixed rational/integer operator== overloads recurse into each other.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace timcoop
