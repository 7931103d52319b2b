#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lamseq {

// All public quantities are signed 64-bit. Arithmetic that could leave the
// 64-bit range goes through the checked helpers below, which widen to 128
// bits and throw instead of wrapping. |values| are kept below 2^62 so that
// short sums of terms stay representable.
using Int = std::int64_t;

class overflow_error : public std::runtime_error {
 public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr Int kValueLimit = Int{1} << 62;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r) || r >= kValueLimit || r <= -kValueLimit)
    throw overflow_error("integer sum exceeds the supported range");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r) || r >= kValueLimit || r <= -kValueLimit)
    throw overflow_error("integer product exceeds the supported range");
  return r;
}

// b^e with b >= 2, e >= 0; throws once the result would leave the range.
inline Int checked_pow(Int base, Int exponent) {
  if (base < 2) throw std::invalid_argument("checked_pow: base must be >= 2");
  if (exponent < 0) throw std::invalid_argument("checked_pow: negative exponent");
  Int r = 1;
  for (Int i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

inline bool is_power_of_two(Int v) { return v > 0 && (v & (v - 1)) == 0; }

// Exponent e with 2^e == v, or -1 when v is not a positive power of two.
inline Int log2_exact(Int v) {
  if (!is_power_of_two(v)) return -1;
  Int e = 0;
  while (v > 1) {
    v >>= 1;
    ++e;
  }
  return e;
}

// Exponent e with base^e == v, or -1 when no such e exists (v >= 1, base >= 2).
inline Int power_index(Int base, Int v) {
  if (v < 1) return -1;
  Int e = 0, p = 1;
  while (p < v) {
    if (p > v / base) return -1;
    p *= base;
    ++e;
  }
  return p == v ? e : -1;
}

inline Int abs_int(Int v) { return v < 0 ? -v : v; }

}  // namespace lamseq
