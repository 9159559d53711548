#include "robustdoe/snr.hpp"

#include <cmath>

namespace robustdoe {

namespace {

void require_nonempty(std::span<const double> responses) {
  if (responses.empty()) throw Error(Errc::empty_input, "SNR requires a non-empty response list");
}

}  // namespace

double snr_smaller_better(std::span<const double> responses) {
  require_nonempty(responses);
  double mean_sq = 0.0;
  for (double y : responses) mean_sq += y * y;
  mean_sq /= static_cast<double>(responses.size());
  if (mean_sq == 0.0)
    throw Error(Errc::degenerate_signal, "all responses are zero; SNR is unbounded");
  return -10.0 * std::log10(mean_sq);
}

double snr_larger_better(std::span<const double> responses) {
  require_nonempty(responses);
  double mean_inv_sq = 0.0;
  for (double y : responses) {
    if (y == 0.0)
      throw Error(Errc::division_by_zero, "zero response in larger-the-better SNR");
    mean_inv_sq += 1.0 / (y * y);
  }
  mean_inv_sq /= static_cast<double>(responses.size());
  return -10.0 * std::log10(mean_inv_sq);
}

double snr_nominal_best(std::span<const double> responses, double target) {
  require_nonempty(responses);
  double mean_sq_dev = 0.0;
  for (double y : responses) mean_sq_dev += (y - target) * (y - target);
  mean_sq_dev /= static_cast<double>(responses.size());
  if (mean_sq_dev == 0.0)
    throw Error(Errc::degenerate_signal, "all responses equal the target; SNR is unbounded");
  return -10.0 * std::log10(mean_sq_dev);
}

double snr_for_objective(const QualityCharacteristic& objective,
                         std::span<const double> responses) {
  switch (objective.kind) {
    case ObjectiveKind::smaller_better:
      return snr_smaller_better(responses);
    case ObjectiveKind::larger_better:
      return snr_larger_better(responses);
    case ObjectiveKind::nominal_best:
      if (!objective.target)
        throw Error(Errc::invalid_argument,
                    "objective '" + objective.name + "' is nominal-best but has no target");
      return snr_nominal_best(responses, *objective.target);
  }
  throw Error(Errc::invalid_argument, "unknown objective kind");
}

QualityLoss quality_loss(std::span<const double> responses, double target) {
  require_nonempty(responses);
  const auto n = static_cast<double>(responses.size());
  double mean = 0.0;
  for (double y : responses) mean += y;
  mean /= n;

  QualityLoss out;
  for (double y : responses) {
    out.expected_loss += (y - target) * (y - target);
    out.variance_part += (y - mean) * (y - mean);
  }
  out.expected_loss /= n;
  out.variance_part /= n;
  out.bias_part = (mean - target) * (mean - target);
  return out;
}

SnrSeries snr_series(const ResponseMatrix& responses) {
  SnrSeries out;
  out.objective = responses.objective;
  out.per_run.reserve(responses.values.rows);
  for (std::size_t i = 0; i < responses.values.rows; ++i) {
    const auto row = responses.values.row(i);
    SnrSeries::Entry e;
    e.mean = summarize(row).mean;
    e.snr = snr_for_objective(responses.objective, row);
    out.per_run.push_back(e);
  }
  return out;
}

}  // namespace robustdoe
