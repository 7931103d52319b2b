#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lamseq/search.hpp"
#include "lamseq/structure_sets.hpp"

namespace lamseq {

enum class LambdaMode { fully_certified, cap_bounded };

struct LambdaOptions {
  // Equation-family certification of the final value (h <= 3 over {2, g}).
  bool certify = false;
  Int scan_ceiling = 0;  // 0: derived from the single-base first-occurrence
  SearchOptions search;
};

// The first k whose minimal union length is exactly h, with the length-h
// witness and, for every smaller k, a certificate of length < h. A scan that
// meets a length > h before any length == h violates the strict growth of
// the sequence and raises; hitting the scan ceiling raises as well.
struct LambdaRecord {
  BaseSet bases;
  Int h = 0;
  Int value = 0;
  LengthCertificate witness_cert;
  std::vector<LengthCertificate> lower_bound_evidence;  // k = 1 .. value-1
  LambdaMode mode = LambdaMode::cap_bounded;
};

LambdaRecord lambda_value(const BaseSet& bases, Int h, const LambdaOptions& = {});

// Closed form for a single odd base g: index ((h-1)(g-1) + 2j) / 2 maps to
// value ((2j-1) g^(h-1) + 1) / 2, for j in [1, (g-1)/2]. Both divisions are
// exact because g is odd.
struct ClosedFormValue {
  Int index = 0;
  Int value = 0;
};
ClosedFormValue lambda_closed_form_odd(Int g, Int h, Int j);

// Predicted first length-3 value over {2, n}: 11 off the structure set S,
// 13 on it, with eight explicitly classified outliers.
enum class ClassificationKind { generic_11, in_S_13, outlier };
struct Classification {
  ClassificationKind kind = ClassificationKind::generic_11;
  Int predicted = 0;
  std::optional<SetWitness> s_witness;  // for the in-S case
  std::string label() const;
};
Classification classify_n(Int n);

// Frequency table of lambda values across odd n in [3, odd_max], checked
// against the prediction per n. For h == 3 the eight outliers are tabulated
// separately from the frequency map.
struct CensusEntry {
  Int n = 0;
  Int value = 0;
  Int predicted = 0;
};
struct CensusReport {
  Int h = 0;
  Int odd_min = 3;
  Int odd_max = 0;
  Int scanned = 0;
  std::map<Int, Int> frequency;      // value -> count, outliers excluded at h=3
  std::vector<CensusEntry> outliers;  // h == 3 only
  std::vector<CensusEntry> mismatches;
  Int unstable = 0;  // records whose search did not cap-stabilize
};
CensusReport limit_point_census(Int h, Int odd_max, Int jobs = 1,
                                const LambdaOptions& = {});

// The eight classified (n, value) exceptions at h = 3.
const std::map<Int, Int>& lambda_h3_outliers();

}  // namespace lamseq
