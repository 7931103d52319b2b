#include "lamseq/diophantine.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace lamseq::dio {
namespace {

using bigint = boost::multiprecision::cpp_int;

Int mod_norm(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

// Exponent e >= 0 with base^e == v, or -1. Exact, no overflow.
Int exact_power_index(Int base, Int v) { return power_index(base, v); }

// Solutions x of sign * coeff * base^x == value, exact.
std::vector<Int> solve_single_power(int sign, Int coeff, Int base, Int value) {
  std::vector<Int> out;
  if (sign < 0) value = -value;
  if (value <= 0) return out;
  if (value % coeff != 0) return out;
  Int e = exact_power_index(base, value / coeff);
  if (e >= 0) out.push_back(e);
  return out;
}

// b-adic valuation of c > 0.
Int valuation(Int base, Int c) {
  Int v = 0;
  while (c % base == 0) {
    c /= base;
    ++v;
  }
  return v;
}

}  // namespace

PowerEquation::PowerEquation(std::vector<EquationTerm> terms, Int target)
    : terms_(std::move(terms)), target_(target) {
  if (terms_.empty() || terms_.size() > 2)
    throw std::invalid_argument("equation must have one or two variable terms");
  for (const auto& t : terms_) {
    if (t.sign != 1 && t.sign != -1)
      throw std::invalid_argument("term sign must be +1 or -1");
    if (t.base < 2) throw std::invalid_argument("term base must be >= 2");
    if (t.coeff < 1 || t.coeff > t.base / 2)
      throw std::invalid_argument("term coefficient must lie in [1, base/2]");
    if (t.var.empty()) throw std::invalid_argument("term needs a variable name");
  }
  if (terms_.size() == 2 && terms_[0].var == terms_[1].var)
    throw std::invalid_argument("equation needs two distinct variables");
}

PowerEquation PowerEquation::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  auto eq_pos = s.find('=');
  if (eq_pos == std::string::npos)
    throw std::invalid_argument("equation needs '=': " + text);
  std::string lhs = s.substr(0, eq_pos);
  std::string rhs = s.substr(eq_pos + 1);
  if (rhs.empty()) throw std::invalid_argument("missing target: " + text);
  Int target = 0;
  {
    std::size_t pos = 0;
    target = std::stoll(rhs, &pos);
    if (pos != rhs.size())
      throw std::invalid_argument("bad target '" + rhs + "'");
  }

  std::vector<EquationTerm> terms;
  std::size_t i = 0;
  while (i < lhs.size()) {
    EquationTerm term;
    term.sign = 1;
    if (lhs[i] == '+' || lhs[i] == '-') {
      term.sign = lhs[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw std::invalid_argument("terms must be joined by '+' or '-': " + text);
    }
    std::size_t num_end = i;
    while (num_end < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[num_end])))
      ++num_end;
    if (num_end == i) throw std::invalid_argument("expected a base in: " + text);
    Int first = std::stoll(lhs.substr(i, num_end - i));
    i = num_end;
    if (i < lhs.size() && lhs[i] == '*') {
      term.coeff = first;
      ++i;
      num_end = i;
      while (num_end < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[num_end])))
        ++num_end;
      if (num_end == i) throw std::invalid_argument("expected a base after '*': " + text);
      term.base = std::stoll(lhs.substr(i, num_end - i));
      i = num_end;
    } else {
      term.coeff = 1;
      term.base = first;
    }
    if (i >= lhs.size() || lhs[i] != '^')
      throw std::invalid_argument("expected '^variable' in: " + text);
    ++i;
    num_end = i;
    while (num_end < lhs.size() && std::isalnum(static_cast<unsigned char>(lhs[num_end])))
      ++num_end;
    if (num_end == i) throw std::invalid_argument("expected a variable name in: " + text);
    term.var = lhs.substr(i, num_end - i);
    i = num_end;
    terms.push_back(std::move(term));
  }
  return PowerEquation(std::move(terms), target);
}

std::string PowerEquation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i == 0)
      out << (t.sign < 0 ? "-" : "");
    else
      out << (t.sign < 0 ? " - " : " + ");
    if (t.coeff != 1) out << t.coeff << '*';
    out << t.base << '^' << t.var;
  }
  out << " = " << target_;
  return out.str();
}

Int PowerEquation::lhs_at(const std::vector<Int>& exponents) const {
  if (exponents.size() != terms_.size())
    throw std::invalid_argument("exponent count does not match the equation");
  Int total = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    Int v = checked_mul(terms_[i].coeff, checked_pow(terms_[i].base, exponents[i]));
    total = checked_add(total, terms_[i].sign < 0 ? -v : v);
  }
  return total;
}

SolutionSet solve_power_sum(Int base, Int c) {
  SolutionSet out;
  out.complete = true;
  out.method = SolveMethod::enumeration;
  if (c < 2) return out;  // both powers are >= 1
  for (Int n = 0, pn = 1; pn <= c - 1; ++n, pn *= base) {
    Int m = exact_power_index(base, c - pn);
    if (m >= 0) out.solutions.push_back({m, n});
    if (pn > (c - 1) / base) break;
  }
  return out;
}

SolutionSet solve_power_diff(Int base, Int c) {
  SolutionSet out;
  out.complete = true;
  out.method = SolveMethod::valuation_factoring;
  if (c == 0) {
    out.infinite_family = "m = n";
    return out;
  }
  if (c > 0) {
    // base^n * (base^delta - 1) = c pins n to the valuation of c.
    Int n = valuation(base, c);
    Int pn = checked_pow(base, n);
    Int cofactor = c / pn;
    Int delta = exact_power_index(base, cofactor + 1);
    if (delta >= 1) out.solutions.push_back({n + delta, n});
  } else {
    SolutionSet mirrored = solve_power_diff(base, -c);
    for (const auto& s : mirrored.solutions)
      out.solutions.push_back({s[1], s[0]});
  }
  return out;
}

SolutionSet solve_two_power_sum(Int c) { return solve_power_sum(2, c); }
SolutionSet solve_two_power_diff(Int c) { return solve_power_diff(2, c); }

IntersectionResult lemma36_intersection() {
  IntersectionResult result;

  // Equating a target-13 form n = ps * 2^x1 + cs * 13 with a target-11 form
  // reduces each pairing to a two-power equation with target 2, 24 or -2:
  //  1: 2^c2 - 2^c1 = 2     n = 2^c1 + 13
  //  2: 2^d2 - 2^d1 = 24    n = 2^d1 + 13
  //  3: 2^g1 + 2^g2 = -2    n = 2^g1 + 13
  //  4: 2^e1 - 2^e2 = 24    n = 2^e1 - 13
  //  5: 2^f1 - 2^f2 = 2     n = 2^f1 - 13
  //  6: 2^h1 + 2^h2 = 24    n = 2^h1 - 13
  //  7: 2^u1 + 2^u2 = 2     n = -2^u1 + 13
  //  8: 2^v1 + 2^v2 = 24    n = -2^v1 + 13
  //  9: 2^w1 - 2^w2 = 2     n = -2^w1 + 13
  struct Reduced {
    int index;
    bool is_sum;
    Int target;
    bool swap;  // reduced solutions are (m, n); x1 = n when swapped
    int ps;     // n = ps * 2^x1 + cs * 13
    int cs;
  };
  const Reduced reduced[9] = {
      {1, false, 2, true, +1, +1},   {2, false, 24, true, +1, +1},
      {3, true, -2, false, +1, +1},  {4, false, 24, false, +1, -1},
      {5, false, 2, false, +1, -1},  {6, true, 24, false, +1, -1},
      {7, true, 2, false, -1, +1},   {8, true, 24, false, -1, +1},
      {9, false, 2, false, -1, +1},
  };
  const char* descriptions[9] = {
      "n = 2^c1 + 13 = 2^c2 + 11",  "n = 2^d1 + 13 = 2^d2 - 11",
      "n = 2^g1 + 13 = -2^g2 + 11", "n = 2^e1 - 13 = 2^e2 + 11",
      "n = 2^f1 - 13 = 2^f2 - 11",  "n = 2^h1 - 13 = -2^h2 + 11",
      "n = -2^u1 + 13 = 2^u2 + 11", "n = -2^v1 + 13 = 2^v2 - 11",
      "n = -2^w1 + 13 = -2^w2 + 11",
  };

  std::set<Int> members;
  for (int i = 0; i < 9; ++i) {
    IntersectionEquation eq;
    eq.index = reduced[i].index;
    eq.description = descriptions[i];
    eq.reduced_target = reduced[i].target;
    eq.is_sum = reduced[i].is_sum;
    eq.reduced = reduced[i].is_sum ? solve_two_power_sum(reduced[i].target)
                                   : solve_two_power_diff(reduced[i].target);
    for (const auto& sol : eq.reduced.solutions) {
      Int x1 = reduced[i].swap ? sol[1] : sol[0];
      Int x2 = reduced[i].swap ? sol[0] : sol[1];
      Int n = reduced[i].ps * checked_pow(2, x1) + reduced[i].cs * 13;
      eq.tuples.push_back({n, x1, x2});
      if (n > 1 && n % 2 == 1) members.insert(n);
    }
    result.equations.push_back(std::move(eq));
  }
  result.members.assign(members.begin(), members.end());
  return result;
}

std::vector<std::vector<Int>> bounded_scan(const PowerEquation& eq,
                                           Int exponent_bound) {
  if (exponent_bound < 1)
    throw std::invalid_argument("exponent bound must be >= 1");
  std::vector<std::vector<Int>> found;
  const auto& terms = eq.terms();
  const bigint target = eq.target();

  std::vector<bigint> pow0(exponent_bound), pow1;
  {
    bigint p = 1;
    for (Int e = 0; e < exponent_bound; ++e, p *= terms[0].base) pow0[e] = p;
  }
  if (terms.size() == 2) {
    pow1.resize(exponent_bound);
    bigint p = 1;
    for (Int e = 0; e < exponent_bound; ++e, p *= terms[1].base) pow1[e] = p;
  }

  for (Int e0 = 0; e0 < exponent_bound; ++e0) {
    bigint v0 = terms[0].sign * terms[0].coeff * pow0[e0];
    if (terms.size() == 1) {
      if (v0 == target) found.push_back({e0});
      continue;
    }
    for (Int e1 = 0; e1 < exponent_bound; ++e1) {
      bigint v1 = terms[1].sign * terms[1].coeff * pow1[e1];
      if (v0 + v1 == target) found.push_back({e0, e1});
    }
  }
  return found;
}

namespace {

// Preperiod and cycle of base^e mod m: residues seen from e = 0, the index
// where the cycle starts, and the cycle length.
struct PowerCycle {
  std::vector<Int> prefix;  // residues for e = 0, 1, ... until the cycle closes
  Int cycle_start = 0;
  Int cycle_length = 0;
};

PowerCycle power_cycle(Int base, Int m) {
  PowerCycle out;
  std::map<Int, Int> first_seen;
  Int v = mod_norm(1, m);
  for (Int e = 0;; ++e) {
    auto it = first_seen.find(v);
    if (it != first_seen.end()) {
      out.cycle_start = it->second;
      out.cycle_length = e - it->second;
      return out;
    }
    first_seen[v] = e;
    out.prefix.push_back(v);
    v = mod_norm(v * (base % m), m);
  }
}

VariableWindow make_window(const EquationTerm& term, Int m) {
  PowerCycle cycle = power_cycle(term.base, m);
  VariableWindow w;
  w.var = term.var;
  w.floor = cycle.cycle_start;
  w.period = cycle.cycle_length;
  for (Int e = cycle.cycle_start; e < cycle.cycle_start + cycle.cycle_length; ++e)
    w.residues.push_back(mod_norm(term.sign * term.coeff * cycle.prefix[e], m));
  return w;
}

std::vector<Int> combine_residues(const std::vector<VariableWindow>& windows, Int m) {
  std::set<Int> combined;
  if (windows.size() == 1) {
    combined.insert(windows[0].residues.begin(), windows[0].residues.end());
  } else {
    for (Int a : windows[0].residues)
      for (Int b : windows[1].residues) combined.insert(mod_norm(a + b, m));
  }
  return {combined.begin(), combined.end()};
}

// Fix variable `fixed` below its floor and solve the single-power residual
// equation in the other variable exactly.
std::vector<BelowFloorCheck> below_floor_checks(const PowerEquation& eq,
                                                const std::vector<VariableWindow>& windows) {
  std::vector<BelowFloorCheck> checks;
  const auto& terms = eq.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (Int e = 0; e < windows[i].floor; ++e) {
      BelowFloorCheck check;
      check.var = terms[i].var;
      check.exponent = e;
      Int fixed = checked_mul(terms[i].coeff, checked_pow(terms[i].base, e));
      if (terms[i].sign < 0) fixed = -fixed;
      check.residual = checked_add(eq.target(), -fixed);
      if (terms.size() == 2) {
        std::size_t j = 1 - i;
        check.other_solutions = solve_single_power(terms[j].sign, terms[j].coeff,
                                                   terms[j].base, check.residual);
      } else {
        // Single-term equation: the fixed value must miss the target.
        if (check.residual == 0) check.other_solutions.push_back(e);
      }
      checks.push_back(std::move(check));
    }
  }
  return checks;
}

}  // namespace

ObstructionOutcome find_obstruction(const PowerEquation& eq,
                                    const ObstructionOptions& opts) {
  ObstructionOutcome outcome;

  std::vector<Int> moduli;
  auto push_modulus = [&](Int m) {
    if (m >= 2 && std::find(moduli.begin(), moduli.end(), m) == moduli.end())
      moduli.push_back(m);
  };
  for (Int m : opts.preferred_moduli) push_modulus(m);
  for (Int m = 2; m <= opts.max_modulus; ++m) push_modulus(m);

  for (Int m : moduli) {
    std::vector<VariableWindow> windows;
    for (const auto& term : eq.terms()) windows.push_back(make_window(term, m));

    Int target_res = mod_norm(eq.target(), m);
    std::vector<Int> combined = combine_residues(windows, m);
    if (std::binary_search(combined.begin(), combined.end(), target_res)) continue;

    auto checks = below_floor_checks(eq, windows);
    bool soluble = false;
    for (const auto& check : checks)
      if (!check.other_solutions.empty()) soluble = true;
    if (soluble) {
      // Genuine solutions under the floor: the equation is soluble and no
      // modulus can certify it.
      for (const auto& check : checks) {
        for (Int other : check.other_solutions) {
          // Report in variable order of the equation.
          std::vector<Int> sol(2);
          std::size_t fixed_index =
              eq.terms()[0].var == check.var ? 0 : 1;
          sol[fixed_index] = check.exponent;
          sol[1 - fixed_index] = other;
          outcome.solutions_found.push_back(std::move(sol));
        }
      }
      return outcome;
    }

    ObstructionCertificate cert{eq, m, std::move(windows), std::move(combined),
                                target_res, std::move(checks)};
    outcome.certificate = std::move(cert);
    return outcome;
  }

  outcome.failure = "no obstruction modulus <= " + std::to_string(opts.max_modulus);
  return outcome;
}

VerifyResult verify_certificate(const ObstructionCertificate& cert) {
  const auto& terms = cert.equation.terms();
  if (cert.modulus < 2) return {false, "modulus out of range"};
  if (cert.windows.size() != terms.size())
    return {false, "window count mismatch"};

  std::set<Int> combined;
  std::vector<std::vector<Int>> window_sets;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& w = cert.windows[i];
    if (w.var != terms[i].var) return {false, "window variable mismatch"};

    PowerCycle cycle = power_cycle(terms[i].base, cert.modulus);
    if (w.floor < cycle.cycle_start) return {false, "floor below preperiod"};
    if (w.period != cycle.cycle_length) return {false, "period mismatch"};

    // Recompute the residues over [floor, floor + period) from scratch.
    std::vector<Int> expect;
    Int v = 1 % cert.modulus;
    for (Int e = 0; e < w.floor; ++e) v = mod_norm(v * (terms[i].base % cert.modulus), cert.modulus);
    for (Int e = 0; e < w.period; ++e) {
      expect.push_back(mod_norm(terms[i].sign * terms[i].coeff * v, cert.modulus));
      v = mod_norm(v * (terms[i].base % cert.modulus), cert.modulus);
    }
    if (expect != w.residues) return {false, "residue window mismatch"};
    window_sets.push_back(expect);
  }

  if (window_sets.size() == 1) {
    combined.insert(window_sets[0].begin(), window_sets[0].end());
  } else {
    for (Int a : window_sets[0])
      for (Int b : window_sets[1]) combined.insert(mod_norm(a + b, cert.modulus));
  }
  std::vector<Int> combined_sorted(combined.begin(), combined.end());
  if (combined_sorted != cert.lhs_residues)
    return {false, "lhs residue set mismatch"};

  if (cert.target_residue != mod_norm(cert.equation.target(), cert.modulus))
    return {false, "target residue mismatch"};
  if (combined.count(cert.target_residue)) return {false, "target attainable"};

  // Below-floor coverage: every exponent under every floor must appear with
  // the right residual and a verified-empty solution list.
  std::set<std::pair<std::string, Int>> covered;
  for (const auto& check : cert.below_floor) {
    std::size_t i = terms.size();
    for (std::size_t t = 0; t < terms.size(); ++t)
      if (terms[t].var == check.var) i = t;
    if (i == terms.size()) return {false, "below-floor variable unknown"};

    Int fixed = checked_mul(terms[i].coeff, checked_pow(terms[i].base, check.exponent));
    if (terms[i].sign < 0) fixed = -fixed;
    if (check.residual != checked_add(cert.equation.target(), -fixed))
      return {false, "below-floor residual mismatch"};

    if (!check.other_solutions.empty())
      return {false, "below-floor solutions present"};
    if (terms.size() == 2) {
      std::size_t j = 1 - i;
      if (!solve_single_power(terms[j].sign, terms[j].coeff, terms[j].base,
                              check.residual)
               .empty())
        return {false, "below-floor solution missed"};
    } else if (check.residual == 0) {
      return {false, "below-floor solution missed"};
    }
    covered.insert({check.var, check.exponent});
  }
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (Int e = 0; e < cert.windows[i].floor; ++e)
      if (!covered.count({terms[i].var, e}))
        return {false, "below-floor coverage incomplete"};

  return {true, ""};
}

namespace {

SolutionSet solve_single_family(int sign, Int coeff, Int base, Int k) {
  SolutionSet out;
  out.complete = true;
  out.method = SolveMethod::enumeration;
  for (Int e : solve_single_power(sign, coeff, base, k)) out.solutions.push_back({e});
  return out;
}

// All four sign layouts of s1 * b^m + s2 * b^n = k merged into one set.
// A diagonal sum solution m == n stands for the coefficient-2 term 2*b^m,
// which is a valid representation only when 2 <= floor(b/2); such solutions
// are excluded for b = 3 (and reported via the two_times_g family otherwise).
SolutionSet solve_pair_family(Int base, Int k) {
  SolutionSet out;
  out.complete = true;
  out.method = SolveMethod::enumeration;
  auto absorb = [&](const SolutionSet& s, bool flip_both) {
    for (auto sol : s.solutions) {
      if (flip_both) std::swap(sol[0], sol[1]);
      if (sol[0] == sol[1] && base / 2 < 2) continue;
      out.solutions.push_back(sol);
    }
  };
  absorb(solve_power_sum(base, k), false);       // + +
  absorb(solve_power_diff(base, k), false);      // + -
  absorb(solve_power_diff(base, -k), true);      // - +  (b^n - b^m = -k)
  absorb(solve_power_sum(base, -k), false);      // - -
  std::sort(out.solutions.begin(), out.solutions.end());
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()),
                      out.solutions.end());
  return out;
}

// Complete scan for 2^a + g^b = k (both terms positive and below k).
SolutionSet scan_positive_mixed(Int g, Int k) {
  SolutionSet out;
  out.complete = true;
  out.method = SolveMethod::enumeration;
  if (k < 2) return out;
  for (Int a = 0, pa = 1; pa <= k - 1; ++a, pa *= 2) {
    Int b = exact_power_index(g, k - pa);
    if (b >= 0) out.solutions.push_back({a, b});
    if (pa > (k - 1) / 2) break;
  }
  return out;
}

}  // namespace

UnionLowerBound certify_union_lower_bound(Int k, Int g, Int h,
                                          const ObstructionOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (g < 3 || g % 2 == 0)
    throw std::invalid_argument("certification needs an odd companion base >= 3");
  if (h < 1 || h > 3)
    throw std::invalid_argument("only weights below h <= 3 can be certified");

  UnionLowerBound lb;
  lb.k = k;
  lb.g = g;
  lb.h = h;
  lb.certified = true;
  if (h == 1) return lb;  // weight 0 represents only 0

  auto note_family = [&](const SolutionSet& s) {
    if (!s.empty()) lb.certified = false;
  };

  // Weight 1: +-2^a = k and +-g^b = k.
  lb.pow2_single = solve_single_family(1, 1, 2, k);
  for (Int e : solve_single_power(-1, 1, 2, k)) lb.pow2_single.solutions.push_back({e});
  lb.powg_single = solve_single_family(1, 1, g, k);
  for (Int e : solve_single_power(-1, 1, g, k)) lb.powg_single.solutions.push_back({e});
  note_family(lb.pow2_single);
  note_family(lb.powg_single);
  if (h == 2) {
    if (!lb.certified) lb.failure = "a weight-1 representation exists";
    return lb;
  }

  // Weight 2, same-base pairs and the coefficient-2 term.
  lb.two_power_pair = solve_pair_family(2, k);
  lb.g_power_pair = solve_pair_family(g, k);
  note_family(lb.two_power_pair);
  note_family(lb.g_power_pair);

  lb.two_times_g.complete = true;
  lb.two_times_g.method = SolveMethod::enumeration;
  if (g >= 5) {
    for (int sign : {1, -1})
      for (Int e : solve_single_power(sign, 2, g, k))
        lb.two_times_g.solutions.push_back({e});
  }
  note_family(lb.two_times_g);

  // Weight 2, mixed: s2 * 2^a + sg * g^b = k for the three sign layouts that
  // can reach a positive target.
  struct Layout {
    int s2, sg;
  };
  for (const Layout& layout : {Layout{1, 1}, Layout{1, -1}, Layout{-1, 1}}) {
    MixedCase mixed;
    mixed.equation = PowerEquation(
        {{layout.s2, 1, 2, "a"}, {layout.sg, 1, g, "b"}}, k);
    if (layout.s2 > 0 && layout.sg > 0) {
      mixed.scan = scan_positive_mixed(g, k);
      mixed.insoluble = mixed.scan.solutions.empty();
      mixed.note = "complete positive-term scan";
    } else {
      ObstructionOutcome outcome = find_obstruction(mixed.equation, opts);
      if (outcome.certificate) {
        mixed.certificate = std::move(outcome.certificate);
        mixed.insoluble = true;
        mixed.note = "obstruction certificate";
      } else if (!outcome.solutions_found.empty()) {
        mixed.scan.solutions = std::move(outcome.solutions_found);
        mixed.scan.complete = false;
        mixed.insoluble = false;
        mixed.note = "solutions found below the scan floors";
      } else {
        mixed.insoluble = false;
        mixed.note = outcome.failure;
      }
    }
    if (!mixed.insoluble) lb.certified = false;
    lb.mixed.push_back(std::move(mixed));
  }

  if (!lb.certified && lb.failure.empty())
    lb.failure = "a weight-1 or weight-2 family is soluble or unresolved";
  return lb;
}

}  // namespace lamseq::dio
