#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mcgame {

// Exact fraction kept in lowest terms with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! for n >= 0, memoized.
const Integer& factorial(int n);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace mcgame
