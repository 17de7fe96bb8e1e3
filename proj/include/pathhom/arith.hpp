#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace pathhom {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class Ring { Q, Z };

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }
inline Integer to_integer(const Rational& q) { return boost::multiprecision::numerator(q); }

const char* ring_name(Ring ring);

}  // namespace pathhom
