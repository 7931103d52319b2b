#include "lamseq/search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "lamseq/expansion.hpp"

namespace lamseq {

Int evaluate_terms(const std::vector<Term>& terms) {
  Int total = 0;
  for (const auto& t : terms)
    total = checked_add(total, checked_mul(t.coeff, checked_pow(t.base, t.exponent)));
  return total;
}

Int weight_of_terms(const std::vector<Term>& terms) {
  Int total = 0;
  for (const auto& t : terms) total += abs_int(t.coeff);
  return total;
}

namespace {

// A multiset of signed unit terms in canonical id order. Ids are
// 2 * entry + (sign < 0); a representation never mixes both signs of one
// entry and never exceeds the entry's coefficient bound.
using Multiset = std::vector<std::int32_t>;

struct MergedWitness {
  bool valid = false;
  std::vector<Term> terms;
};

// Depth-limited enumeration plus a meet-in-the-middle index per half size.
// One searcher is shared for all queries against the same (bases, cap).
class UnionSearcher {
 public:
  UnionSearcher(const BaseSet& bases, Int cap) : pool_(bases, cap) {
    const auto& entries = pool_.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      values_.push_back(entries[i].value);
      values_.push_back(-entries[i].value);
      bounds_.push_back(entries[i].max_coeff);
    }
  }

  const TermPool& pool() const { return pool_; }

  // First witness of weight exactly h summing to k, in canonical order.
  std::optional<std::vector<Term>> find_at_depth(Int k, Int h) {
    if (h < 1) return std::nullopt;
    const Int index_size = (h + 1) / 2;
    const Int probe_size = h - index_size;
    const Layer& layer = build_layer(index_size);

    std::optional<std::vector<Term>> found;
    Multiset probe;
    enumerate(probe, 0, probe_size, 0, [&](const Multiset& p, Int sum) {
      if (found) return false;
      auto it = layer.sums.find(k - sum);
      if (it == layer.sums.end()) return true;
      for (const Multiset& stored : it->second) {
        MergedWitness merged = merge_and_validate(p, stored);
        if (merged.valid) {
          found = std::move(merged.terms);
          return false;
        }
      }
      return true;
    });
    return found;
  }

 private:
  struct Layer {
    Int size = 0;
    std::unordered_map<Int, std::vector<Multiset>> sums;
  };

  Int entry_of(std::int32_t id) const { return id / 2; }
  int sign_of(std::int32_t id) const { return id % 2 ? -1 : 1; }

  // Canonical enumeration of valid multisets of exactly `want` ids starting
  // at `first`. The callback returns false to stop.
  template <typename Callback>
  bool enumerate(Multiset& current, Int sum, Int want, std::int32_t first,
                 const Callback& cb) {
    if (want == 0) return cb(current, sum);
    for (std::int32_t id = first; id < static_cast<std::int32_t>(values_.size()); ++id) {
      if (!current.empty()) {
        std::int32_t prev = current.back();
        // Same entry, opposite sign: a cancelling pair, never part of a
        // minimal representation and invalid as a coefficient.
        if (entry_of(prev) == entry_of(id) && prev != id) continue;
        if (prev == id) {
          Int copies = 0;
          for (auto it = current.rbegin(); it != current.rend() && *it == id; ++it)
            ++copies;
          if (copies + 1 > bounds_[entry_of(id)]) continue;
        }
      }
      current.push_back(id);
      bool keep = enumerate(current, sum + values_[id], want - 1, id, cb);
      current.pop_back();
      if (!keep) return false;
    }
    return true;
  }

  const Layer& build_layer(Int size) {
    std::scoped_lock lock(layer_mutex_);
    auto it = layers_.find(size);
    if (it != layers_.end()) return it->second;

    Layer layer;
    layer.size = size;
    Multiset ms;
    enumerate(ms, 0, size, 0, [&](const Multiset& m, Int sum) {
      layer.sums[sum].push_back(m);
      return true;
    });
    return layers_.emplace(size, std::move(layer)).first->second;
  }

  MergedWitness merge_and_validate(const Multiset& a, const Multiset& b) const {
    MergedWitness out;
    Multiset merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));

    const auto& entries = pool_.entries();
    std::vector<Term> terms;
    for (std::size_t i = 0; i < merged.size();) {
      std::int32_t id = merged[i];
      std::size_t j = i;
      while (j < merged.size() && entry_of(merged[j]) == entry_of(id)) ++j;
      Int mult = static_cast<Int>(j - i);
      // Mixed signs within one entry cancel; reject the candidate.
      for (std::size_t t = i; t < j; ++t)
        if (merged[t] != id) return out;
      const PoolEntry& entry = entries[entry_of(id)];
      if (mult > entry.max_coeff) return out;

      Term term;
      if (entry.value == 1 && mult == 1 && pool_.bases().contains(2)) {
        term.base = 2;
        term.exponent = 0;
      } else {
        term.base = entry.base;
        term.exponent = entry.exponent;
      }
      term.coeff = sign_of(id) * mult;
      terms.push_back(term);
      i = j;
    }
    out.valid = true;
    out.terms = std::move(terms);
    return out;
  }

  TermPool pool_;
  std::vector<Int> values_;   // signed unit values, id-indexed
  std::vector<Int> bounds_;   // per entry
  std::mutex layer_mutex_;
  std::map<Int, Layer> layers_;
};

// Memoized searchers keyed by (bases, cap): concurrent reads, serialized
// inserts, trimmed when it grows past a generous bound.
class SearcherCache {
 public:
  std::shared_ptr<UnionSearcher> get(const BaseSet& bases, Int cap) {
    const std::string key = bases.to_string() + "#" + std::to_string(cap);
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (cache_.size() > 4096) cache_.clear();
    auto searcher = std::make_shared<UnionSearcher>(bases, cap);
    cache_.emplace(key, searcher);
    return searcher;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<UnionSearcher>> cache_;
};

SearcherCache& searcher_cache() {
  static SearcherCache cache;
  return cache;
}

std::vector<Term> expansion_terms(const Expansion& e) {
  std::vector<Term> terms;
  for (const auto& [exp, coeff] : e.digits) terms.push_back({e.base, exp, coeff});
  return terms;
}

struct DepthResult {
  Int length = 0;
  std::vector<Term> witness;
};

// Iterative deepening below the single-base bound; falls back to the best
// single-base expansion when no shorter union witness exists within the cap.
DepthResult search_with_cap(const BaseSet& bases, Int k, Int cap, Int ub,
                            const std::vector<Term>& ub_witness) {
  auto searcher = searcher_cache().get(bases, cap);
  for (Int h = 1; h < ub; ++h) {
    auto witness = searcher->find_at_depth(k, h);
    if (witness) return {h, std::move(*witness)};
  }
  return {ub, ub_witness};
}

}  // namespace

LengthCertificate min_length_union(Int k, const BaseSet& bases,
                                   const SearchOptions& opts) {
  if (k < 1) throw std::invalid_argument("min_length_union requires k >= 1");

  // Single-base upper bound and fallback witness.
  Int ub = 0;
  std::vector<Term> ub_witness;
  for (Int b : bases.bases()) {
    Expansion e = expand(k, b);
    if (ub == 0 || e.length() < ub) {
      ub = e.length();
      ub_witness = expansion_terms(e);
    }
  }

  Int cap = opts.initial_cap;
  if (cap <= 0) {
    Int shift = std::min<Int>(ub, 10);
    cap = checked_mul(checked_mul(4, k), Int{1} << shift);
  }
  cap = std::min(std::max(cap, Int{8}), opts.max_cap);

  LengthCertificate cert;
  cert.k = k;
  cert.bases = bases;

  DepthResult current = search_with_cap(bases, k, cap, ub, ub_witness);
  bool stable = false;
  while (cap < opts.max_cap) {
    Int next_cap = std::min(checked_mul(cap, 2), opts.max_cap);
    DepthResult next = search_with_cap(bases, k, next_cap, ub, ub_witness);
    if (next.length == current.length) {
      stable = true;
      cap = next_cap;
      break;
    }
    current = std::move(next);
    cap = next_cap;
  }

  cert.length = current.length;
  cert.witness = std::move(current.witness);
  cert.cap_used = cap;
  cert.cap_stable = stable;
  cert.exact = stable;

  // Proof-grade exactness for short lengths over {2, g}: close every
  // smaller-weight equation family.
  Int g = bases.odd_companion_of_two();
  if (cert.length <= 3 && g != 0) {
    if (opts.certify && stable) {
      cert.evidence =
          dio::certify_union_lower_bound(k, g, cert.length, opts.obstruction);
      cert.exact = stable && cert.evidence->certified;
    } else {
      cert.exact = false;
    }
  }
  return cert;
}

std::vector<LengthCertificate> enumerate_lengths(const BaseSet& bases, Int k_max,
                                                 const SearchOptions& opts) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  SearchOptions row_opts = opts;
  row_opts.certify = false;  // rows share pools; certify single values instead
  std::vector<LengthCertificate> rows;
  rows.reserve(k_max);
  for (Int k = 1; k <= k_max; ++k)
    rows.push_back(min_length_union(k, bases, row_opts));
  return rows;
}

}  // namespace lamseq
