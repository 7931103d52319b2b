#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamseq/ints.hpp"

namespace lamseq::dio {

// One variable term of an exponential equation: sign * coeff * base^var.
struct EquationTerm {
  int sign = 1;  // +1 or -1
  Int coeff = 1;  // 1 <= coeff <= floor(base/2)
  Int base = 2;
  std::string var;  // exponent variable name, unique per equation
};

// sign_0 * c_0 * b_0^x_0 [ + sign_1 * c_1 * b_1^x_1 ] = target, with one or
// two variable terms. Construction validates the shape; malformed equations
// (duplicate variables, oversized coefficients, bad bases) throw.
class PowerEquation {
 public:
  PowerEquation(std::vector<EquationTerm> terms, Int target);

  // Mini-grammar: "[+-]B^V [+-] B^V = C" with optional "c*" coefficient
  // prefixes, e.g. "2^a - 5^b = 19" or "-2^a + 2*13^b = 22". Whitespace is
  // ignored. Throws std::invalid_argument on parse errors.
  static PowerEquation parse(const std::string& text);

  const std::vector<EquationTerm>& terms() const { return terms_; }
  Int target() const { return target_; }
  std::string to_string() const;

  // Exact left-hand side at the given exponents (one per term, in order).
  Int lhs_at(const std::vector<Int>& exponents) const;

 private:
  std::vector<EquationTerm> terms_;
  Int target_ = 0;
};

enum class SolveMethod { enumeration, valuation_factoring, obstruction_bounded };

// Outcome of a solve: the listed exponent assignments, whether the listing is
// known to be complete, and how completeness was established. The difference
// equation 2^m - 2^n = 0 is the one infinite family; it is reported through
// the descriptor instead of an enumeration.
struct SolutionSet {
  std::vector<std::vector<Int>> solutions;  // one entry per variable, in order
  bool complete = false;
  SolveMethod method = SolveMethod::enumeration;
  std::string infinite_family;  // nonempty only for the m == n descriptor

  bool empty() const { return solutions.empty() && infinite_family.empty(); }
};

// 2^m + 2^n = c. Complete for every integer c: both powers are positive, so
// a scan of n with an exact residual power test covers all solutions.
SolutionSet solve_two_power_sum(Int c);

// 2^m - 2^n = c. Complete via valuation factoring: for c != 0, n is pinned to
// the 2-adic valuation of c and the cofactor must be 2^delta - 1. For c == 0
// the infinite family m == n is returned as a descriptor.
SolutionSet solve_two_power_diff(Int c);

// Same-base analogues used by the weight-2 closure for odd bases.
SolutionSet solve_power_sum(Int base, Int c);   // b^m + b^n = c
SolutionSet solve_power_diff(Int base, Int c);  // b^m - b^n = c, c != 0

// The nine two-power equations whose solutions identify the odd n lying in
// both structure sets (targets 2, 24, -2 in the three sign layouts).
struct IntersectionEquation {
  int index = 0;               // 1..9
  std::string description;     // e.g. "n = 2^c1 + 13 = 2^c2 + 11"
  Int reduced_target = 0;      // target of the reduced two-power equation
  bool is_sum = false;         // reduced shape: sum or difference
  SolutionSet reduced;         // solutions of the reduced equation
  // (n, x1, x2) per reduced solution, before the positive-odd filter.
  std::vector<std::vector<Int>> tuples;
};

struct IntersectionResult {
  std::vector<IntersectionEquation> equations;  // all nine, in order
  std::vector<Int> members;  // positive odd n > 1, sorted: the intersection
};

IntersectionResult lemma36_intersection();

// Exhaustive scan of all exponent tuples with every exponent < bound.
// Exact arithmetic; overflow cannot occur silently.
std::vector<std::vector<Int>> bounded_scan(const PowerEquation& eq,
                                           Int exponent_bound);

// Residue data for one variable term above its exponent floor: the exponents
// [floor, floor + period) hit every residue the term attains from the floor
// on, because base^e mod m is eventually periodic and the floor is at or past
// the preperiod.
struct VariableWindow {
  std::string var;
  Int floor = 0;
  Int period = 0;
  std::vector<Int> residues;  // sign * coeff * base^e mod m over the window
};

// A below-floor line: fixing one variable at an exponent under its floor
// leaves a single-power equation in the other variable, which is solved
// exactly. A certificate requires every such residual to be insoluble.
struct BelowFloorCheck {
  std::string var;       // the variable that was fixed
  Int exponent = 0;      // its value
  Int residual = 0;      // target minus the fixed term
  std::vector<Int> other_solutions;  // must be empty in a valid certificate
};

// A replayable insolubility proof: above the floors the left-hand side only
// attains lhs_residues mod modulus, the target residue is not among them, and
// every exponent choice below a floor is refuted by an exact residual check.
struct ObstructionCertificate {
  PowerEquation equation;
  Int modulus = 0;
  std::vector<VariableWindow> windows;  // one per variable term
  std::vector<Int> lhs_residues;        // sorted
  Int target_residue = 0;
  std::vector<BelowFloorCheck> below_floor;
};

struct ObstructionOptions {
  // Tried first, in order; defaults to the ring moduli that settle the seven
  // classified cases: 4, 8, 15, 91, 133, 2.
  std::vector<Int> preferred_moduli{4, 8, 15, 91, 133, 2};
  Int max_modulus = 1000;  // then ascending 2..max_modulus
};

struct ObstructionOutcome {
  std::optional<ObstructionCertificate> certificate;
  // When no certificate exists because genuine solutions were found during
  // the below-floor analysis, they are reported here.
  std::vector<std::vector<Int>> solutions_found;
  std::string failure;  // nonempty when neither certificate nor solutions
};

ObstructionOutcome find_obstruction(const PowerEquation& eq,
                                    const ObstructionOptions& opts = {});

struct VerifyResult {
  bool ok = false;
  std::string reason;  // stable reason codes, e.g. "period mismatch"
};

// Independent replay: recomputes floors-from-preperiod, periods, residue
// windows, the combined residue set and the below-floor residuals, and
// compares everything against the certificate.
VerifyResult verify_certificate(const ObstructionCertificate& cert);

// ---- Representation lower bounds over {2, g} ------------------------------

// One mixed two-base case s2 * 2^a + sg * g^b = k. Closed either by a
// complete positive-term scan or by an obstruction certificate; trivial for
// the all-negative sign layout against a positive target.
struct MixedCase {
  PowerEquation equation;
  SolutionSet scan;  // complete when no certificate is needed
  std::optional<ObstructionCertificate> certificate;
  bool insoluble = false;
  std::string note;
};

// Evidence that k admits no representation of weight < h over A_2 u A_g,
// assembled the way the classification proof closes its cases: exact solves
// of the single-base weight-1 and weight-2 families plus scan-or-obstruction
// for the mixed family. Only h <= 3 is supported; deeper families are out of
// certification scope.
struct UnionLowerBound {
  Int k = 0;
  Int g = 0;
  Int h = 0;
  bool certified = false;
  // Weight-1 families: +-2^a = k, +-g^b = k.
  SolutionSet pow2_single, powg_single;
  // Weight-2 families (present when h == 3): +-2^a +- 2^b, +-g^a +- g^b,
  // +-2*g^a, and the three nontrivial mixed sign layouts.
  SolutionSet two_power_pair, g_power_pair, two_times_g;
  std::vector<MixedCase> mixed;
  std::string failure;  // nonempty when certification did not close
};

UnionLowerBound certify_union_lower_bound(Int k, Int g, Int h,
                                          const ObstructionOptions& opts = {});

}  // namespace lamseq::dio
