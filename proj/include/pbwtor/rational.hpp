#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pbwtor {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the canonical form the
// rest of the library relies on (zero is 0/1).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational rational_of(long n, long d = 1) { return Rational(n, d); }

}  // namespace pbwtor
