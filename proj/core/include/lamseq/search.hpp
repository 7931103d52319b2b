#pragma once

#include <optional>
#include <vector>

#include "lamseq/base_set.hpp"
#include "lamseq/diophantine.hpp"
#include "lamseq/term_pool.hpp"

namespace lamseq {

// One witness term sign * coeff * base^exponent with 1 <= coeff <= base/2.
struct Term {
  Int base = 0;
  Int exponent = 0;
  Int coeff = 0;  // signed, nonzero
};

Int evaluate_terms(const std::vector<Term>& terms);
Int weight_of_terms(const std::vector<Term>& terms);

struct SearchOptions {
  Int initial_cap = 0;       // 0: use 4 * k * 2^ub
  Int max_cap = Int{1} << 40;
  // Run the equation-family closure on two-base results of length <= 3 so
  // the certificate is exact in the proof sense, not only cap-stable.
  bool certify = true;
  dio::ObstructionOptions obstruction;
};

// Minimal length of k over the union of the base sets' generators, with the
// witness, the cap under which minimality was established, and whether the
// result is exact. Exactness requires the reported length to be stable under
// cap doubling and, for lengths <= 3 over a {2, g} set, the equation-family
// closure to go through. An unstable result at max_cap is returned with
// exact == false instead of failing.
struct LengthCertificate {
  Int k = 0;
  BaseSet bases;
  Int length = 0;
  std::vector<Term> witness;
  Int cap_used = 0;
  bool exact = false;
  bool cap_stable = false;
  std::optional<dio::UnionLowerBound> evidence;
};

LengthCertificate min_length_union(Int k, const BaseSet& bases,
                                   const SearchOptions& opts = {});

// Lengths for every k in [1, k_max], sharing one pool and one half-sum index
// across rows. Certificates carry cap stability but skip the per-row
// equation closure; use min_length_union for certified single values.
std::vector<LengthCertificate> enumerate_lengths(const BaseSet& bases, Int k_max,
                                                 const SearchOptions& opts = {});

// Independent exhaustive check: the minimal total weight sum|c| over all
// assignments of coefficients to slots (base, exponent) with b^j <= cap, or
// nullopt when no representation of weight <= h_max exists. Shares nothing
// with the union search beyond the slot listing; used as the oracle for every
// derived expected value. Throws pool_too_large when the slot count times
// depth would make the enumeration intractable.
std::optional<Int> brute_force_oracle(Int k, const BaseSet& bases, Int h_max,
                                      Int cap);

class pool_too_large : public std::runtime_error {
 public:
  explicit pool_too_large(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lamseq
