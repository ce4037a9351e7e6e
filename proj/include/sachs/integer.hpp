#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sachs {

// Coefficients are carried in 128 bits; every operation that could wrap is
// checked and throws std::overflow_error instead.
using Integer = __int128;

inline Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit integer overflow in addition");
  return r;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("128-bit integer overflow in subtraction");
  return r;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit integer overflow in multiplication");
  return r;
}

inline Integer choose2(Integer k) { return k < 2 ? 0 : checked_mul(k, k - 1) / 2; }

std::string to_string(Integer value);

// True when the value also fits a signed 64-bit integer.
inline bool fits_int64(Integer v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace sachs
