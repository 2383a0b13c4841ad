#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgs {

// Exact set cardinalities. State spaces here exceed 10^15, so counts are
// arbitrary-precision rather than fixed-width.
using SetCount = boost::multiprecision::cpp_int;

inline SetCount pow_count(std::uint32_t base, std::uint32_t exponent) {
  SetCount result = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline std::string to_decimal(const SetCount& value) { return value.str(); }

inline double to_double(const SetCount& value) {
  return value.convert_to<double>();
}

}  // namespace cgs
