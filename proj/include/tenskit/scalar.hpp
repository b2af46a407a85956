#ifndef TENSKIT_SCALAR_HPP
#define TENSKIT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tenskit {

// Exact rational scalars. cpp_rational keeps the canonical form we rely on:
// gcd(|num|, den) = 1 and den > 0, with arbitrary-precision integers.
using Integer = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with decimal integers (optional leading '-').
// Rejects everything else, including q = 0.
Scalar scalar_from_string(const std::string& text);

// Canonical text: "p" when the denominator is 1, else "p/q" with q > 0.
std::string scalar_to_string(const Scalar& s);

} // namespace tenskit

#endif
