#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>

#include "gorcurve/error.hpp"

namespace gorcurve {

using Int = std::int64_t;
// Determinants and adjugates of small integer matrices are accumulated here.
using Wide = __int128;

namespace checked {

template <typename T>
T add(T a, T b) {
  T out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer addition");
  return out;
}

template <typename T>
T sub(T a, T b) {
  T out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return out;
}

template <typename T>
T mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return out;
}

inline Int narrow(Wide w) {
  if (w > std::numeric_limits<Int>::max() || w < std::numeric_limits<Int>::min())
    throw Error(ErrorKind::Overflow, "value does not fit in 64 bits");
  return static_cast<Int>(w);
}

}  // namespace checked

inline Wide abs_wide(Wide w) { return w < 0 ? -w : w; }

inline Wide gcd_wide(Wide a, Wide b) {
  a = abs_wide(a);
  b = abs_wide(b);
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// gcd of a list; 0 for an empty or all-zero list.
inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

inline std::string to_string(Wide w) {
  if (w == 0) return "0";
  bool negative = w < 0;
  std::string digits;
  // Work on the negative side so the minimum value does not overflow.
  if (!negative) w = -w;
  while (w != 0) {
    digits.insert(digits.begin(), static_cast<char>('0' - static_cast<int>(w % 10)));
    w /= 10;
  }
  return negative ? "-" + digits : digits;
}

}  // namespace gorcurve
