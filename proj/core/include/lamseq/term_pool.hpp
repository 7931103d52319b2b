#pragma once

#include <vector>

#include "lamseq/base_set.hpp"

namespace lamseq {

// One usable power b^j together with the largest coefficient a representation
// may carry on it. Entries are unit valued; a coefficient c shows up in a
// representation as multiplicity c of the entry, contributing weight c.
struct PoolEntry {
  Int value = 0;  // b^j, positive
  Int base = 0;
  Int exponent = 0;
  Int max_coeff = 0;  // floor(base/2); maximum over bases for shared values
};

// All powers b^j <= cap for every base of the set, deduplicated by value
// (cross-base collisions keep the widest coefficient bound, which only
// happens at value 1). Entries are sorted by value ascending.
class TermPool {
 public:
  TermPool(const BaseSet& bases, Int cap);

  const std::vector<PoolEntry>& entries() const { return entries_; }
  Int cap() const { return cap_; }
  const BaseSet& bases() const { return bases_; }

  // The materialized signed term list c * b^j with 1 <= c <= max_coeff,
  // |c * b^j| <= cap: deduplicated by value and closed under negation.
  std::vector<Int> signed_terms() const;

 private:
  BaseSet bases_;
  Int cap_ = 0;
  std::vector<PoolEntry> entries_;
};

}  // namespace lamseq
