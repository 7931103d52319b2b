#pragma once

#include <map>
#include <string>

#include "lamseq/ints.hpp"

namespace lamseq {

// A signed-digit representation of an integer in a single base: a sparse map
// exponent -> nonzero coefficient with |coefficient| <= floor(base/2).
//
// For base 2 the coefficients are +-1 and no two adjacent exponents are
// occupied (non-adjacent form). For odd bases the digits lie in the balanced
// set [-(g-1)/2, (g-1)/2]. Both forms are unique and of minimal total weight
// sum|digit| among single-base signed-digit representations.
struct Expansion {
  Int base = 2;
  std::map<Int, Int> digits;  // exponent -> coefficient, coefficient != 0
  Int value = 0;

  // Total weight sum_j |digits[j]|; zero only for the empty expansion.
  Int length() const;
};

// Signed binary expansion of k >= 1: start from the plain binary form, then
// rewrite runs of equal signs, adjacent opposite signs and oversized
// coefficients until the non-adjacent fixpoint is reached. Rewrites scan from
// the least significant exponent upward, so the output is deterministic (and
// equal to the canonical non-adjacent form). Throws std::invalid_argument for
// k < 1 and expansion_step_overflow if the rewrite loop exceeds its step
// ceiling (which would indicate a bug, not bad input).
Expansion expand_binary_special(Int k);

// Balanced-digit expansion of k >= 1 in odd base g >= 3: write the plain
// base-g digits, then push every digit above (g-1)/2 down by g with a carry,
// scanning from the least significant position upward. Even bases and g < 3
// are rejected.
Expansion expand_odd_special(Int k, Int g);

// Dispatch on the base: 2 -> binary, odd >= 3 -> balanced.
Expansion expand(Int k, Int base);

// Minimal single-base length: total weight of the corresponding expansion.
Int length_hat(Int k, Int base);

// Exact sum of digits[j] * base^j. Accepts the empty map (value 0) and any
// coefficient map; overflow throws.
Int evaluate(const Expansion& e);

// Rendering in term order of descending exponent, e.g. "+2^9 -2^5 -2^3 +2^0"
// or "+9^5 -3*9^4 +9^3 -4*9^2 +3*9^1 -9^0".
std::string to_string(const Expansion& e);

class expansion_step_overflow : public std::runtime_error {
 public:
  explicit expansion_step_overflow(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace lamseq
