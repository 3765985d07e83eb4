#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycperm {

// Group orders in this domain reach well past 10^150, so every order is kept
// as an unbounded integer.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline BigInt parse_decimal(const std::string& text) { return BigInt(text); }

inline BigInt factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace cycperm
