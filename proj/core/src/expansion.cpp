#include "lamseq/expansion.hpp"

#include <sstream>
#include <vector>

namespace lamseq {
namespace {

Int bit_length(Int k) {
  Int bits = 0;
  while (k > 0) {
    k >>= 1;
    ++bits;
  }
  return bits;
}

void check_positive(Int k) {
  if (k < 1) throw std::invalid_argument("expansion requires k >= 1");
}

// Drop zero entries so the map holds only genuine digits.
void prune_zeros(std::map<Int, Int>& d) {
  for (auto it = d.begin(); it != d.end();) {
    if (it->second == 0)
      it = d.erase(it);
    else
      ++it;
  }
}

}  // namespace

Int Expansion::length() const {
  Int total = 0;
  for (const auto& [exp, coeff] : digits) total += abs_int(coeff);
  return total;
}

Expansion expand_binary_special(Int k) {
  check_positive(k);

  std::map<Int, Int> d;
  Int rest = k;
  for (Int e = 0; rest > 0; ++e, rest >>= 1)
    if (rest & 1) d[e] = 1;

  // Fixpoint rewriting. Each pass scans low-to-high and applies the first
  // applicable rule per window:
  //   carry:     |c| >= 2 at j         ->  c mod 2 stays, carry to j+1
  //   same run:  s at j..j+t-1 (t>=2)  ->  -s at j, +s at j+t
  //   opposite:  s at j, -s at j+1     ->  -s at j
  const Int step_ceiling = 64 * (bit_length(k) + 4) * (bit_length(k) + 4);
  Int steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;

    for (auto it = d.begin(); it != d.end(); ++it) {
      Int c = it->second;
      if (abs_int(c) < 2) continue;
      Int rem = c % 2;  // same sign as c when odd
      Int carry = (c - rem) / 2;
      it->second = rem;
      d[it->first + 1] += carry;
      changed = true;
      break;
    }
    if (!changed) {
      for (auto it = d.begin(); it != d.end(); ++it) {
        Int j = it->first;
        Int s = it->second;
        auto next = d.find(j + 1);
        if (next == d.end() || next->second == 0 || s == 0) continue;
        if (next->second == s) {
          Int t = 2;
          while (true) {
            auto further = d.find(j + t);
            if (further == d.end() || further->second != s) break;
            ++t;
          }
          for (Int i = 0; i < t; ++i) d[j + i] = 0;
          d[j] = -s;
          d[j + t] += s;
          changed = true;
          break;
        }
        if (next->second == -s) {
          d[j] = -s;
          d[j + 1] = 0;
          changed = true;
          break;
        }
      }
    }

    prune_zeros(d);
    if (++steps > step_ceiling)
      throw expansion_step_overflow("binary rewrite exceeded its step ceiling");
  }

  Expansion e;
  e.base = 2;
  e.digits = std::move(d);
  e.value = k;
  return e;
}

Expansion expand_odd_special(Int k, Int g) {
  check_positive(k);
  if (g < 3 || g % 2 == 0)
    throw std::invalid_argument("balanced expansion requires an odd base >= 3");

  const Int half = (g - 1) / 2;
  std::map<Int, Int> d;
  Int rest = k;
  Int carry = 0;
  Int steps = 0;
  const Int step_ceiling = 64 * (bit_length(k) + 4);
  for (Int e = 0; rest > 0 || carry != 0; ++e) {
    Int digit = rest % g + carry;
    rest /= g;
    carry = 0;
    if (digit > half) {
      digit -= g;
      carry = 1;
    }
    if (digit != 0) d[e] = digit;
    if (++steps > step_ceiling)
      throw expansion_step_overflow("balanced rewrite exceeded its step ceiling");
  }

  Expansion e;
  e.base = g;
  e.digits = std::move(d);
  e.value = k;
  return e;
}

Expansion expand(Int k, Int base) {
  if (base == 2) return expand_binary_special(k);
  return expand_odd_special(k, base);
}

Int length_hat(Int k, Int base) { return expand(k, base).length(); }

Int evaluate(const Expansion& e) {
  Int total = 0;
  for (const auto& [exp, coeff] : e.digits)
    total = checked_add(total, checked_mul(coeff, checked_pow(e.base, exp)));
  return total;
}

std::string to_string(const Expansion& e) {
  if (e.digits.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it) {
    const auto [exp, coeff] = *it;
    if (!first) out << ' ';
    first = false;
    out << (coeff < 0 ? '-' : '+');
    if (abs_int(coeff) != 1) out << abs_int(coeff) << '*';
    out << e.base << '^' << exp;
  }
  return out.str();
}

}  // namespace lamseq
