#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace scss {

// Non-negative integral cost. All accumulation goes through the checked
// helpers below; a result that does not fit is reported, never wrapped.
using Weight = std::uint64_t;

inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::max();

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Weight checked_add(Weight a, Weight b) {
  Weight out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("weight addition overflows 64 bits");
  return out;
}

inline Weight checked_mul(Weight a, Weight b) {
  Weight out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("weight multiplication overflows 64 bits");
  return out;
}

}  // namespace scss
