#include "lamseq/term_pool.hpp"

#include <algorithm>
#include <sstream>

namespace lamseq {

BaseSet::BaseSet(std::initializer_list<Int> bases)
    : BaseSet(std::vector<Int>(bases)) {}

BaseSet::BaseSet(std::vector<Int> bases) : bases_(std::move(bases)) {
  if (bases_.empty()) throw std::invalid_argument("base set must be nonempty");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  for (Int b : bases_) {
    if (b == 2) continue;
    if (b < 3 || b % 2 == 0)
      throw std::invalid_argument(
          "base set may contain 2 and odd integers >= 3 only");
  }
}

bool BaseSet::contains(Int b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

Int BaseSet::odd_companion_of_two() const {
  if (bases_.size() != 2 || bases_[0] != 2) return 0;
  return bases_[1];
}

std::string BaseSet::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    if (i) out << ',';
    out << bases_[i];
  }
  return out.str();
}

TermPool::TermPool(const BaseSet& bases, Int cap) : bases_(bases), cap_(cap) {
  if (cap < 1) throw std::invalid_argument("pool cap must be >= 1");
  for (Int b : bases.bases()) {
    const Int bound = b / 2;
    Int value = 1;
    for (Int e = 0;; ++e) {
      auto it = std::find_if(entries_.begin(), entries_.end(),
                             [&](const PoolEntry& p) { return p.value == value; });
      if (it != entries_.end()) {
        // Cross-base collision (only at value 1): keep the wider bound.
        it->max_coeff = std::max(it->max_coeff, bound);
      } else {
        entries_.push_back({value, b, e, bound});
      }
      if (value > cap / b) break;
      value *= b;
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const PoolEntry& a, const PoolEntry& b) { return a.value < b.value; });
}

std::vector<Int> TermPool::signed_terms() const {
  std::vector<Int> terms;
  for (const auto& entry : entries_) {
    for (Int c = 1; c <= entry.max_coeff; ++c) {
      if (entry.value > cap_ / c) break;
      terms.push_back(c * entry.value);
      terms.push_back(-c * entry.value);
    }
  }
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

}  // namespace lamseq
