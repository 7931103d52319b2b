#include "lamseq/lambda.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "lamseq/expansion.hpp"

namespace lamseq {
namespace {

// First k with single-base minimal length exactly h; used only to size the
// scan ceiling guard.
Int first_single_base_occurrence(Int base, Int h) {
  for (Int k = 1; k <= Int{1} << 40; ++k)
    if (length_hat(k, base) == h) return k;
  throw std::runtime_error("no single-base occurrence found");
}

}  // namespace

const std::map<Int, Int>& lambda_h3_outliers() {
  static const std::map<Int, Int> outliers = {{3, 21},  {5, 19},  {9, 19},
                                              {11, 23}, {13, 22}, {15, 21},
                                              {19, 22}, {21, 26}};
  return outliers;
}

LambdaRecord lambda_value(const BaseSet& bases, Int h, const LambdaOptions& opts) {
  if (h < 1) throw std::invalid_argument("lambda index h must be >= 1");

  Int ceiling = opts.scan_ceiling;
  if (ceiling <= 0) {
    Int worst = 0;
    for (Int b : bases.bases())
      worst = std::max(worst, first_single_base_occurrence(b, h));
    ceiling = std::max<Int>(256, checked_mul(16, worst));
  }

  // One cap for the whole scan so every row shares the same memoized pools.
  SearchOptions row_opts = opts.search;
  row_opts.certify = false;
  if (row_opts.initial_cap <= 0) {
    Int shift = std::min<Int>(h + 2, 12);
    row_opts.initial_cap = checked_mul(checked_mul(4, ceiling), Int{1} << shift);
  }

  LambdaRecord record;
  record.bases = bases;
  record.h = h;

  for (Int k = 1; k <= ceiling; ++k) {
    LengthCertificate cert = min_length_union(k, bases, row_opts);
    if (!cert.cap_stable) throw std::runtime_error(
        "lambda scan hit an unstable length certificate at k = " + std::to_string(k));
    if (cert.length == h) {
      record.value = k;
      if (opts.certify) {
        SearchOptions certify_opts = row_opts;
        certify_opts.certify = true;
        certify_opts.obstruction = opts.search.obstruction;
        cert = min_length_union(k, bases, certify_opts);
      }
      record.witness_cert = std::move(cert);
      bool proof_grade = opts.certify && record.witness_cert.exact &&
                         record.witness_cert.evidence &&
                         record.witness_cert.evidence->certified;
      record.mode = proof_grade ? LambdaMode::fully_certified
                                : LambdaMode::cap_bounded;
      return record;
    }
    if (cert.length > h) {
      std::ostringstream msg;
      msg << "lambda monotonicity violated: length " << cert.length << " at k = "
          << k << " before any value of length " << h;
      throw std::runtime_error(msg.str());
    }
    record.lower_bound_evidence.push_back(std::move(cert));
  }
  throw std::runtime_error("lambda scan ceiling " + std::to_string(ceiling) +
                           " reached without a length-" + std::to_string(h) +
                           " value");
}

ClosedFormValue lambda_closed_form_odd(Int g, Int h, Int j) {
  if (g < 3 || g % 2 == 0)
    throw std::invalid_argument("closed form needs an odd base >= 3");
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  if (j < 1 || j > (g - 1) / 2)
    throw std::invalid_argument("j must lie in [1, (g-1)/2]");
  ClosedFormValue out;
  out.index = ((h - 1) * (g - 1) + 2 * j) / 2;
  out.value = checked_add(checked_mul(2 * j - 1, checked_pow(g, h - 1)), 1) / 2;
  return out;
}

std::string Classification::label() const {
  switch (kind) {
    case ClassificationKind::generic_11: return "generic";
    case ClassificationKind::in_S_13: return "in-S";
    case ClassificationKind::outlier: return "outlier";
  }
  return "";
}

Classification classify_n(Int n) {
  if (n <= 1 || n % 2 == 0)
    throw std::invalid_argument("classification is defined for odd n > 1");
  Classification out;
  auto outlier = lambda_h3_outliers().find(n);
  if (outlier != lambda_h3_outliers().end()) {
    out.kind = ClassificationKind::outlier;
    out.predicted = outlier->second;
    return out;
  }
  if (auto witness = member_S(n)) {
    out.kind = ClassificationKind::in_S_13;
    out.predicted = 13;
    out.s_witness = witness;
    return out;
  }
  out.kind = ClassificationKind::generic_11;
  out.predicted = 11;
  return out;
}

CensusReport limit_point_census(Int h, Int odd_max, Int jobs,
                                const LambdaOptions& opts) {
  if (h < 1 || h > 3)
    throw std::invalid_argument("census supports h in {1, 2, 3}");
  if (odd_max < 23) throw std::invalid_argument("census needs odd_max >= 23");

  std::vector<Int> ns;
  for (Int n = 3; n <= odd_max; n += 2) ns.push_back(n);

  std::vector<CensusEntry> entries(ns.size());
  std::vector<char> stable(ns.size(), 1);

  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Int n = ns[i];
      LambdaOptions local = opts;
      local.certify = false;
      LambdaRecord rec = lambda_value(BaseSet{2, n}, h, local);
      Int predicted = 0;
      if (h == 1)
        predicted = 1;
      else if (h == 2)
        predicted = n == 3 ? 5 : 3;
      else
        predicted = classify_n(n).predicted;
      entries[i] = {n, rec.value, predicted};
      stable[i] = rec.witness_cert.cap_stable ? 1 : 0;
    }
  };

  Int usable = std::max<Int>(1, std::min<Int>(jobs, static_cast<Int>(ns.size())));
  if (usable == 1) {
    worker(0, ns.size());
  } else {
    std::vector<std::thread> threads;
    std::size_t chunk = (ns.size() + usable - 1) / usable;
    for (Int t = 0; t < usable; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(ns.size(), begin + chunk);
      if (begin >= end) break;
      threads.emplace_back(worker, begin, end);
    }
    for (auto& th : threads) th.join();
  }

  CensusReport report;
  report.h = h;
  report.odd_max = odd_max;
  report.scanned = static_cast<Int>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const CensusEntry& e = entries[i];
    bool outlier = h == 3 && lambda_h3_outliers().count(e.n) > 0;
    if (outlier)
      report.outliers.push_back(e);
    else
      ++report.frequency[e.value];
    if (e.value != e.predicted) report.mismatches.push_back(e);
    if (!stable[i]) ++report.unstable;
  }
  return report;
}

}  // namespace lamseq
