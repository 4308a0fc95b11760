#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nrt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(unsigned base, unsigned exp) { return boost::multiprecision::pow(BigInt(base), exp); }

}  // namespace nrt
