#include "robustdoe/effects.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace robustdoe {

namespace {

void check_response(std::span<const double> response, const OrthogonalArray& inner) {
  if (response.size() != static_cast<std::size_t>(inner.runs))
    throw Error(Errc::shape_mismatch, "response length " + std::to_string(response.size()) +
                                          " does not match " + inner.name + " (" +
                                          std::to_string(inner.runs) + " runs)");
  for (double v : response)
    if (!std::isfinite(v)) throw Error(Errc::invalid_argument, "response values must be finite");
}

}  // namespace

std::vector<LevelMeans> level_means(std::span<const double> response,
                                    const OrthogonalArray& inner,
                                    std::span<const FactorAssignment> assignment) {
  check_response(response, inner);
  std::vector<LevelMeans> out;
  for (const auto& [column, factor] : assignment) {
    if (column < 1 || column > inner.columns)
      throw Error(Errc::unknown_factor, "factor '" + factor.name + "' is bound to column " +
                                            std::to_string(column) + " outside " + inner.name);
    const int nlv = inner.levels_per_column[static_cast<std::size_t>(column - 1)];
    LevelMeans lm;
    lm.factor = factor.name;
    lm.means.assign(static_cast<std::size_t>(nlv), 0.0);
    lm.counts.assign(static_cast<std::size_t>(nlv), 0);
    for (int run = 1; run <= inner.runs; ++run) {
      const int lv = inner.level_at(run, column);
      lm.means[static_cast<std::size_t>(lv - 1)] += response[static_cast<std::size_t>(run - 1)];
      ++lm.counts[static_cast<std::size_t>(lv - 1)];
    }
    for (std::size_t l = 0; l < lm.means.size(); ++l)
      if (lm.counts[l] > 0) lm.means[l] /= static_cast<double>(lm.counts[l]);
    out.push_back(std::move(lm));
  }
  return out;
}

RangeTable range_analysis(std::span<const double> response, const OrthogonalArray& inner,
                          std::span<const FactorAssignment> assignment) {
  RangeTable table;
  for (auto& lm : level_means(response, inner, assignment)) {
    RangeEntry e;
    e.factor = lm.factor;
    e.level_means = lm.means;
    // max_element keeps the first maximum, so ties resolve to the lowest level
    const auto hi = std::max_element(lm.means.begin(), lm.means.end());
    const auto lo = std::min_element(lm.means.begin(), lm.means.end());
    e.range = *hi - *lo;
    e.optimal_level = static_cast<int>(hi - lm.means.begin()) + 1;
    for (std::size_t l = 0; l < lm.means.size(); ++l)
      if (static_cast<int>(l + 1) != e.optimal_level && lm.means[l] == *hi) e.tie = true;
    table.factors.push_back(std::move(e));
  }

  std::vector<std::size_t> order(table.factors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return table.factors[a].range > table.factors[b].range;
  });
  for (std::size_t idx : order) table.factor_order.push_back(table.factors[idx].factor);
  return table;
}

std::vector<std::pair<std::string, int>> RangeTable::optimal_combination() const {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& e : factors) out.emplace_back(e.factor, e.optimal_level);
  return out;
}

AnovaTable anova(std::span<const double> response, const OrthogonalArray& inner,
                 std::span<const FactorAssignment> assignment) {
  check_response(response, inner);

  const auto n = static_cast<double>(response.size());
  double grand = 0.0;
  for (double v : response) grand += v;
  grand /= n;

  AnovaTable table;
  table.df_total = static_cast<int>(response.size()) - 1;
  for (double v : response) table.ss_total += (v - grand) * (v - grand);

  int df_used = 0;
  double ss_used = 0.0;
  for (auto& lm : level_means(response, inner, assignment)) {
    AnovaRow row;
    row.factor = lm.factor;
    for (std::size_t l = 0; l < lm.means.size(); ++l)
      row.ss += static_cast<double>(lm.counts[l]) * (lm.means[l] - grand) * (lm.means[l] - grand);
    if (row.ss < 0.0) row.ss = 0.0;  // guard tiny negative rounding
    row.df = static_cast<int>(lm.means.size()) - 1;
    row.ms = row.df > 0 ? row.ss / row.df : 0.0;
    df_used += row.df;
    ss_used += row.ss;
    table.factors.push_back(std::move(row));
  }

  table.df_error = table.df_total - df_used;
  if (table.df_error < 0)
    throw Error(Errc::invalid_argument, "assigned factors exceed the array's degrees of freedom");
  table.ss_error = table.ss_total - ss_used;
  if (table.ss_error < 0.0 && table.ss_error > -1e-12) table.ss_error = 0.0;

  if (table.df_error == 0) {
    table.no_error_term = true;  // table still emitted, F and p left empty
    return table;
  }

  table.ms_error = table.ss_error / table.df_error;
  for (auto& row : table.factors) {
    if (table.ms_error > 0.0) {
      row.f = row.ms / table.ms_error;
      row.p = 1.0 - f_cdf(*row.f, row.df, table.df_error);
    } else {
      // zero residual: factor either explains nothing (F = 0) or everything
      row.f = row.ss == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      row.p = row.ss == 0.0 ? 1.0 : 0.0;
    }
  }
  return table;
}

ConfirmationEntry confirmation_compare(std::span<const double> before,
                                       std::span<const double> after,
                                       const QualityCharacteristic& objective) {
  if (before.empty() || after.empty())
    throw Error(Errc::empty_input, "confirmation requires non-empty before and after responses");

  ConfirmationEntry e;
  e.objective = objective.name;
  e.before_stats = summarize(before);
  e.after_stats = summarize(after);
  e.before_snr = snr_for_objective(objective, before);
  e.after_snr = snr_for_objective(objective, after);

  e.mean_reduction = (e.before_stats.mean - e.after_stats.mean) / e.before_stats.mean;
  e.std_reduction = e.before_stats.std_population == 0.0
                        ? 0.0
                        : (e.before_stats.std_population - e.after_stats.std_population) /
                              e.before_stats.std_population;
  e.snr_improvement = (e.after_snr - e.before_snr) / std::abs(e.before_snr);

  if (objective.threshold) {
    const Threshold& t = *objective.threshold;
    e.verdict.applicable = true;
    const bool lower_is_safe = t.comparator == Comparator::le || t.comparator == Comparator::lt;
    auto worst = [&](std::span<const double> xs) {
      return lower_is_safe ? *std::max_element(xs.begin(), xs.end())
                           : *std::min_element(xs.begin(), xs.end());
    };
    e.verdict.before_worst = worst(before);
    e.verdict.after_worst = worst(after);
    e.verdict.before_pass = t.satisfied(e.verdict.before_worst);
    e.verdict.after_pass = t.satisfied(e.verdict.after_worst);
  }
  return e;
}

}  // namespace robustdoe
