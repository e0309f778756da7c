#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ncop {

// all arithmetic is exact; no floating point anywhere in the library
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// "p/q", or just "p" when the denominator is 1
inline std::string to_string(const Rat& v) { return v.str(); }

inline bool is_integer(const Rat& v) {
  return boost::multiprecision::denominator(v) == 1;
}

inline Int integer_part(const Rat& v) {
  return boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v);
}

}  // namespace ncop
