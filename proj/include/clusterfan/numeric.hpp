#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterfan {

// Exact arbitrary-precision integers and rationals.  The whole engine is
// exact: no floating point is used anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

}  // namespace clusterfan
