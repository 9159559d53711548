#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robustdoe/domain.hpp"
#include "robustdoe/orthogonal_array.hpp"
#include "robustdoe/snr.hpp"

namespace robustdoe {

// Post-GRA factor analysis: level means, range analysis, ANOVA, and the
// before/after confirmation comparison.

struct LevelMeans {
  std::string factor;
  std::vector<double> means;  // index 0 = level 1
  std::vector<int> counts;

  bool operator==(const LevelMeans&) const = default;
};

// Mean of the response over the runs where each factor sits at each level.
// Response length must equal inner.runs. Unknown factors in `assignment`
// throw UnknownFactor (factors must reference columns of `inner`).
std::vector<LevelMeans> level_means(std::span<const double> response,
                                    const OrthogonalArray& inner,
                                    std::span<const FactorAssignment> assignment);

struct RangeEntry {
  std::string factor;
  std::vector<double> level_means;
  double range = 0.0;          // max(level_means) - min(level_means)
  int optimal_level = 1;       // argmax level mean (response is larger-better)
  bool tie = false;            // another level shares the max

  bool operator==(const RangeEntry&) const = default;
};

struct RangeTable {
  std::vector<RangeEntry> factors;          // in assignment order
  std::vector<std::string> factor_order;    // sorted by descending range

  // (factor, optimal level) pairs in assignment order, e.g. A->3 B->3 C->1.
  std::vector<std::pair<std::string, int>> optimal_combination() const;

  bool operator==(const RangeTable&) const = default;
};

RangeTable range_analysis(std::span<const double> response, const OrthogonalArray& inner,
                          std::span<const FactorAssignment> assignment);

struct AnovaRow {
  std::string factor;
  double ss = 0.0;
  int df = 0;
  double ms = 0.0;
  std::optional<double> f;  // absent when there is no error term
  std::optional<double> p;

  bool operator==(const AnovaRow&) const = default;
};

struct AnovaTable {
  std::vector<AnovaRow> factors;
  double ss_error = 0.0;
  int df_error = 0;
  double ms_error = 0.0;        // 0 when df_error == 0
  double ss_total = 0.0;
  int df_total = 0;
  bool no_error_term = false;   // df_error == 0; F and p omitted

  bool operator==(const AnovaTable&) const = default;
};

// Fixed-effects decomposition over the balanced inner array:
//   ss_factor = sum_levels n_l * (level_mean - grand_mean)^2, df = levels-1,
//   ss_error  = ss_total - sum ss_factor (residual columns + remainder),
//   F = ms_factor / ms_error, p = 1 - f_cdf(F; df_factor, df_error).
AnovaTable anova(std::span<const double> response, const OrthogonalArray& inner,
                 std::span<const FactorAssignment> assignment);

// CDF of the F distribution via the regularized incomplete beta function,
// absolute error <= 1e-8. Throws InvalidArgument for x < 0 or df < 1.
double f_cdf(double x, int d1, int d2);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

struct ThresholdVerdict {
  bool applicable = false;  // objective has a threshold
  double before_worst = 0.0;
  double after_worst = 0.0;
  bool before_pass = true;  // every response satisfies the threshold
  bool after_pass = true;

  bool operator==(const ThresholdVerdict&) const = default;
};

struct ConfirmationEntry {
  std::string objective;
  SummaryStats before_stats;
  SummaryStats after_stats;
  double before_snr = 0.0;
  double after_snr = 0.0;
  double mean_reduction = 0.0;    // (before - after) / before
  double std_reduction = 0.0;     // (before - after) / before
  double snr_improvement = 0.0;   // (after - before) / |before|
  ThresholdVerdict verdict;

  bool operator==(const ConfirmationEntry&) const = default;
};

struct ConfirmationReport {
  std::vector<ConfirmationEntry> entries;

  bool operator==(const ConfirmationReport&) const = default;
};

// Before/after comparison of one objective under the same noise conditions.
ConfirmationEntry confirmation_compare(std::span<const double> before,
                                       std::span<const double> after,
                                       const QualityCharacteristic& objective);

}  // namespace robustdoe
