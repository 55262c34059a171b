#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace runiv {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps lowest terms with positive denominator, which is
// exactly the canonical form the rest of the library assumes.
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

/// Floor of the integer square root; n must be >= 0.
Int isqrt(const Int& n);

/// True iff n is a perfect square (n >= 0 required for true).
bool is_square(const Int& n);

}  // namespace runiv
