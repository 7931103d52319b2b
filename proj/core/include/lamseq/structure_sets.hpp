#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamseq/search.hpp"

namespace lamseq {

// The fixed sets behind the length-3 classification: Q holds the small values
// of binary weight <= 2, S the odd n with |2^c +- n| = 11 and T the odd n
// with |2^d +- n| = 13.
enum class NamedSet { Q, S, T, Intersection };

NamedSet parse_set_name(const std::string& name);  // "Q","S","T","intersection"

// How a member satisfies |2^c +- n| = target.
enum class SetWitnessForm {
  pow_minus_target,   // n = 2^c - target
  pow_plus_target,    // n = 2^c + target
  target_minus_pow,   // n = target - 2^c
};

struct SetWitness {
  Int exponent = 0;
  SetWitnessForm form = SetWitnessForm::pow_minus_target;
  std::string to_string(Int target) const;
};

bool member_Q(Int t);
// The published weight-<=2 witness over powers of two, when t is in Q.
std::optional<std::vector<Term>> q_witness(Int t);

// Membership for odd n > 1; n == target itself is excluded (it has weight 1,
// not 2). Throws std::invalid_argument for even n or n <= 1.
std::optional<SetWitness> member_S(Int n);
std::optional<SetWitness> member_T(Int n);

// All members <= bound in ascending order; bound >= 3.
std::vector<Int> enumerate_set(NamedSet set, Int bound);

// Cross-check of the equation characterization against the published
// three-part parametrizations taken literally. equation_only lists members
// the parametrization misses (known nonempty for T), param_only the reverse.
struct ParametrizationCheck {
  std::vector<Int> equation_only;
  std::vector<Int> param_only;
};
ParametrizationCheck crosscheck_S(Int bound);
ParametrizationCheck crosscheck_T(Int bound);

}  // namespace lamseq
