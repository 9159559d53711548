#include "robustdoe/gra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace robustdoe {

namespace {

void normalize_column(const Matrix& in, Matrix& out, std::size_t j, ObjectiveKind kind,
                      const std::optional<double>& target) {
  double lo = in.at(0, j), hi = in.at(0, j);
  for (std::size_t i = 1; i < in.rows; ++i) {
    lo = std::min(lo, in.at(i, j));
    hi = std::max(hi, in.at(i, j));
  }

  if (kind == ObjectiveKind::nominal_best) {
    if (!target)
      throw Error(Errc::invalid_argument,
                  "nominal-best normalization needs a target for column " + std::to_string(j + 1));
    double max_dev = 0.0;
    for (std::size_t i = 0; i < in.rows; ++i)
      max_dev = std::max(max_dev, std::abs(in.at(i, j) - *target));
    if (max_dev == 0.0)
      throw Error(Errc::zero_range,
                  "column " + std::to_string(j + 1) + " sits entirely on the target");
    for (std::size_t i = 0; i < in.rows; ++i)
      out.at(i, j) = 1.0 - std::abs(in.at(i, j) - *target) / max_dev;
    return;
  }

  if (hi == lo)
    throw Error(Errc::zero_range, "column " + std::to_string(j + 1) +
                                      " is constant; drop or perturb it before normalizing");
  const double span = hi - lo;
  for (std::size_t i = 0; i < in.rows; ++i) {
    const double x = in.at(i, j);
    out.at(i, j) = kind == ObjectiveKind::larger_better ? (x - lo) / span : (hi - x) / span;
  }
}

}  // namespace

NormalizedSeries normalize(const Matrix& series, std::span<const ObjectiveKind> kinds,
                           std::span<const std::optional<double>> targets) {
  if (series.rows < 2)
    throw Error(Errc::invalid_argument, "normalization needs at least two runs");
  if (kinds.size() != series.cols)
    throw Error(Errc::invalid_argument, "one objective kind per column is required");
  if (!targets.empty() && targets.size() != series.cols)
    throw Error(Errc::invalid_argument, "one target entry per column is required");

  NormalizedSeries out;
  out.source = NormalizationSource::raw_response;
  out.values = Matrix(series.rows, series.cols);
  for (std::size_t j = 0; j < series.cols; ++j)
    normalize_column(series, out.values, j, kinds[j],
                     targets.empty() ? std::nullopt : targets[j]);
  return out;
}

NormalizedSeries normalize_snr(const Matrix& snr_series) {
  std::vector<ObjectiveKind> kinds(snr_series.cols, ObjectiveKind::larger_better);
  NormalizedSeries out = normalize(snr_series, kinds);
  out.source = NormalizationSource::snr;
  return out;
}

Matrix grey_relational_coefficients(const NormalizedSeries& normalized, double rho) {
  if (!(rho > 0.0 && rho <= 1.0))
    throw Error(Errc::invalid_rho, "rho must lie in (0, 1]");
  const Matrix& x = normalized.values;
  if (x.rows == 0 || x.cols == 0)
    throw Error(Errc::empty_input, "empty normalized series");

  // deviation from the all-ones reference sequence
  double dmin = 1.0, dmax = 0.0;
  for (double v : x.data) {
    if (v < -1e-12 || v > 1.0 + 1e-12)
      throw Error(Errc::invalid_argument, "normalized entries must lie in [0, 1]");
    const double d = std::abs(1.0 - v);
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }

  Matrix grc(x.rows, x.cols);
  if (dmax == 0.0) {  // every sequence equals the reference
    for (auto& v : grc.data) v = 1.0;
    return grc;
  }
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) {
      const double d = std::abs(1.0 - x.at(i, j));
      grc.at(i, j) = (dmin + rho * dmax) / (d + rho * dmax);
    }
  return grc;
}

GradeResult grey_relational_grade(const Matrix& grc,
                                  const std::optional<std::vector<double>>& weights) {
  if (grc.rows == 0 || grc.cols == 0)
    throw Error(Errc::empty_input, "empty coefficient matrix");

  std::vector<double> w;
  if (weights) {
    w = *weights;
    if (w.size() != grc.cols)
      throw Error(Errc::invalid_weights, "expected " + std::to_string(grc.cols) + " weights");
    double sum = 0.0;
    for (double v : w) {
      if (v < 0.0) throw Error(Errc::invalid_weights, "weights must be nonnegative");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw Error(Errc::invalid_weights, "weights must sum to 1");
  } else {
    w.assign(grc.cols, 1.0 / static_cast<double>(grc.cols));
  }

  GradeResult out;
  out.grd.resize(grc.rows);
  for (std::size_t i = 0; i < grc.rows; ++i) {
    double g = 0.0;
    for (std::size_t j = 0; j < grc.cols; ++j) g += w[j] * grc.at(i, j);
    out.grd[i] = g;
  }

  // rank 1 = largest grade; equal grades keep run order (lower index first)
  std::vector<std::size_t> order(grc.rows);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.grd[a] > out.grd[b]; });
  out.rank.resize(grc.rows);
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    out.rank[order[pos]] = static_cast<int>(pos + 1);
  for (std::size_t pos = 1; pos < order.size(); ++pos)
    if (out.grd[order[pos]] == out.grd[order[pos - 1]]) out.has_ties = true;

  return out;
}

GreyResult grey_relational_analysis(const NormalizedSeries& normalized, double rho,
                                    const std::optional<std::vector<double>>& weights) {
  GreyResult out;
  out.rho = rho;
  out.grc = grey_relational_coefficients(normalized, rho);
  auto grade = grey_relational_grade(out.grc, weights);
  out.grd = std::move(grade.grd);
  out.rank = std::move(grade.rank);
  out.has_ties = grade.has_ties;
  return out;
}

}  // namespace robustdoe
