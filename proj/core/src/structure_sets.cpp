#include "lamseq/structure_sets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lamseq {
namespace {

const std::vector<Int>& q_members() {
  static const std::vector<Int> members = {1,  2,  3,  4,  5,  6,  7,  8,  9,
                                           10, 12, 14, 15, 16, 17, 18, 20, 24};
  return members;
}

// The published weight-<=2 witnesses for Q, as (exponent, coeff) pairs.
const std::map<Int, std::vector<Term>>& q_witnesses() {
  static const std::map<Int, std::vector<Term>> w = {
      {1, {{2, 0, 1}}},
      {2, {{2, 1, 1}}},
      {3, {{2, 0, -1}, {2, 2, 1}}},
      {4, {{2, 2, 1}}},
      {5, {{2, 0, 1}, {2, 2, 1}}},
      {6, {{2, 1, -1}, {2, 3, 1}}},
      {7, {{2, 0, -1}, {2, 3, 1}}},
      {8, {{2, 3, 1}}},
      {9, {{2, 0, 1}, {2, 3, 1}}},
      {10, {{2, 1, 1}, {2, 3, 1}}},
      {12, {{2, 2, -1}, {2, 4, 1}}},
      {14, {{2, 1, -1}, {2, 4, 1}}},
      {15, {{2, 0, -1}, {2, 4, 1}}},
      {16, {{2, 4, 1}}},
      {17, {{2, 0, 1}, {2, 4, 1}}},
      {18, {{2, 1, 1}, {2, 4, 1}}},
      {20, {{2, 2, 1}, {2, 4, 1}}},
      {24, {{2, 3, -1}, {2, 5, 1}}},
  };
  return w;
}

void check_odd_gt1(Int n) {
  if (n <= 1 || n % 2 == 0)
    throw std::invalid_argument("set membership is defined for odd n > 1");
}

// Odd n > 1 with |2^c +- n| = target and n != target. The three solvable
// layouts each reduce to one exact power test, so no scan bound is needed.
std::optional<SetWitness> member_with_target(Int n, Int target) {
  check_odd_gt1(n);
  if (n == target) return std::nullopt;
  Int e = log2_exact(checked_add(n, target));
  if (e >= 0) return SetWitness{e, SetWitnessForm::pow_minus_target};
  e = log2_exact(n - target);
  if (e >= 0) return SetWitness{e, SetWitnessForm::pow_plus_target};
  e = log2_exact(target - n);
  if (e >= 0) return SetWitness{e, SetWitnessForm::target_minus_pow};
  return std::nullopt;
}

std::vector<Int> enumerate_by_membership(Int bound, Int target) {
  std::vector<Int> out;
  for (Int n = 3; n <= bound; n += 2)
    if (member_with_target(n, target)) out.push_back(n);
  return out;
}

}  // namespace

NamedSet parse_set_name(const std::string& name) {
  if (name == "Q" || name == "q") return NamedSet::Q;
  if (name == "S" || name == "s") return NamedSet::S;
  if (name == "T" || name == "t") return NamedSet::T;
  if (name == "intersection" || name == "ST" || name == "S&T")
    return NamedSet::Intersection;
  throw std::invalid_argument("unknown set name: " + name);
}

std::string SetWitness::to_string(Int target) const {
  std::ostringstream out;
  switch (form) {
    case SetWitnessForm::pow_minus_target:
      out << "2^" << exponent << " - " << target;
      break;
    case SetWitnessForm::pow_plus_target:
      out << "2^" << exponent << " + " << target;
      break;
    case SetWitnessForm::target_minus_pow:
      out << target << " - 2^" << exponent;
      break;
  }
  return out.str();
}

bool member_Q(Int t) {
  return std::binary_search(q_members().begin(), q_members().end(), t);
}

std::optional<std::vector<Term>> q_witness(Int t) {
  auto it = q_witnesses().find(t);
  if (it == q_witnesses().end()) return std::nullopt;
  return it->second;
}

std::optional<SetWitness> member_S(Int n) { return member_with_target(n, 11); }
std::optional<SetWitness> member_T(Int n) { return member_with_target(n, 13); }

std::vector<Int> enumerate_set(NamedSet set, Int bound) {
  if (bound < 3) throw std::invalid_argument("enumeration bound must be >= 3");
  switch (set) {
    case NamedSet::Q: {
      std::vector<Int> out;
      for (Int t : q_members())
        if (t <= bound) out.push_back(t);
      return out;
    }
    case NamedSet::S:
      return enumerate_by_membership(bound, 11);
    case NamedSet::T:
      return enumerate_by_membership(bound, 13);
    case NamedSet::Intersection: {
      std::vector<Int> out;
      for (Int n = 3; n <= bound; n += 2)
        if (member_S(n) && member_T(n)) out.push_back(n);
      return out;
    }
  }
  throw std::logic_error("unreachable set name");
}

namespace {

// The three-part parametrizations exactly as published. The T3 branch uses
// exponent phi + 2 with phi >= 4, which is what the cross-check is probing.
std::set<Int> parametrized_S(Int bound) {
  std::set<Int> out;
  for (Int gamma : {1, 2, 3}) {
    Int w = 11 - (Int{1} << gamma);
    if (w >= 3 && w <= bound) out.insert(w);
  }
  for (Int alpha = 1;; ++alpha) {
    Int t = checked_add(checked_pow(2, alpha), 11);
    if (t > bound) break;
    out.insert(t);
  }
  for (Int beta = 4;; ++beta) {
    Int s = checked_pow(2, beta) - 11;
    if (s > bound) break;
    if (s >= 3) out.insert(s);
  }
  return out;
}

std::set<Int> parametrized_T(Int bound) {
  std::set<Int> out;
  for (Int m1 : {1, 2, 3}) {
    Int l = 13 - (Int{1} << m1);
    if (l >= 3 && l <= bound) out.insert(l);
  }
  for (Int gamma = 1;; ++gamma) {
    Int m = checked_add(checked_pow(2, gamma), 13);
    if (m > bound) break;
    out.insert(m);
  }
  for (Int phi = 4;; ++phi) {
    Int k = checked_pow(2, phi + 2) - 13;
    if (k > bound) break;
    if (k >= 3) out.insert(k);
  }
  return out;
}

ParametrizationCheck crosscheck(Int bound, Int target, const std::set<Int>& param) {
  ParametrizationCheck out;
  for (Int n = 3; n <= bound; n += 2) {
    bool by_equation = member_with_target(n, target).has_value();
    bool by_param = param.count(n) > 0;
    if (by_equation && !by_param) out.equation_only.push_back(n);
    if (!by_equation && by_param) out.param_only.push_back(n);
  }
  return out;
}

}  // namespace

ParametrizationCheck crosscheck_S(Int bound) {
  return crosscheck(bound, 11, parametrized_S(bound));
}

ParametrizationCheck crosscheck_T(Int bound) {
  return crosscheck(bound, 13, parametrized_T(bound));
}

}  // namespace lamseq
