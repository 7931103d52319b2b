#include "lamseq/search.hpp"

namespace lamseq {
namespace {

// A coefficient slot (base, power) with its digit bound. The oracle assigns
// a coefficient in [-bound, bound] to every slot and minimizes the total
// assigned weight; it shares no search logic with the union searcher.
struct Slot {
  Int value = 0;
  Int bound = 0;
};

struct OracleState {
  const std::vector<Slot>& slots;
  Int nodes = 0;
  Int node_limit = 0;
};

bool exists_with_budget(OracleState& st, std::size_t idx, Int target, Int budget) {
  if (target == 0) return true;
  if (idx == st.slots.size()) return false;
  if (++st.nodes > st.node_limit)
    throw pool_too_large("oracle enumeration exceeded its work limit");

  const Slot& slot = st.slots[idx];
  // Slots are sorted by value descending, so everything reachable from here
  // is bounded by budget * slot.value.
  if (abs_int(target) > checked_mul(budget, slot.value)) return false;

  Int cmax = std::min(slot.bound, budget);
  for (Int c = -cmax; c <= cmax; ++c)
    if (exists_with_budget(st, idx + 1, target - c * slot.value, budget - abs_int(c)))
      return true;
  return false;
}

}  // namespace

std::optional<Int> brute_force_oracle(Int k, const BaseSet& bases, Int h_max,
                                      Int cap) {
  if (h_max < 1 || h_max > 10)
    throw std::invalid_argument("oracle depth must lie in [1, 10]");
  if (cap < 1) throw std::invalid_argument("oracle cap must be >= 1");

  std::vector<Slot> slots;
  for (Int b : bases.bases()) {
    for (Int v = 1;; ) {
      slots.push_back({v, b / 2});
      if (v > cap / b) break;
      v *= b;
    }
  }
  std::sort(slots.begin(), slots.end(),
            [](const Slot& a, const Slot& b) { return a.value > b.value; });
  if (slots.size() > 128)
    throw pool_too_large("oracle pool has more than 128 slots");

  for (Int h = 1; h <= h_max; ++h) {
    OracleState st{slots, 0, Int{200'000'000}};
    if (exists_with_budget(st, 0, k, h)) return h;
  }
  return std::nullopt;
}

}  // namespace lamseq
