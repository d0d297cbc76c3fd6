#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hankelfold {

using BigInt = mpz_class;

/// Nonnegative sequence index. Values above kIndexMax are rejected, never wrapped.
using Index = std::uint64_t;

inline constexpr Index kIndexMax =
    static_cast<Index>(std::numeric_limits<std::int64_t>::max());

inline Index checked_add(Index a, Index b) {
  Index r = 0;
  if (__builtin_add_overflow(a, b, &r) || r > kIndexMax) {
    throw std::overflow_error("index overflow in addition");
  }
  return r;
}

inline Index checked_mul(Index a, Index b) {
  Index r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > kIndexMax) {
    throw std::overflow_error("index overflow in multiplication");
  }
  return r;
}

/// 2^e as an Index.
inline Index checked_pow2(unsigned e) {
  if (e >= 63) throw std::overflow_error("index overflow: 2^" + std::to_string(e));
  return Index{1} << e;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace hankelfold
