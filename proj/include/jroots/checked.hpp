#pragma once

#include <cstdint>

#include "jroots/errors.hpp"

namespace jroots {

using Coord = std::int64_t;

inline Coord checked_add(Coord a, Coord b) {
  Coord out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Coord checked_sub(Coord a, Coord b) {
  Coord out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Coord checked_mul(Coord a, Coord b) {
  Coord out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

inline Coord checked_neg(Coord a) { return checked_sub(0, a); }

}  // namespace jroots
