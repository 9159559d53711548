#pragma once

#include <span>
#include <vector>

#include "robustdoe/domain.hpp"

namespace robustdoe {

// Signal-to-noise ratios, in dB, base-10 throughout. Values are kept
// unrounded; presentation rounding happens only in the report layer.

// SNR = -10*log10(mean(y_i^2)). Throws EmptyInput, DegenerateSignal (all zero).
double snr_smaller_better(std::span<const double> responses);

// SNR = -10*log10(mean(1/y_i^2)). Throws EmptyInput, DivisionByZero (any zero).
double snr_larger_better(std::span<const double> responses);

// SNR = -10*log10(mean((y_i - target)^2)). Throws EmptyInput,
// DegenerateSignal (all responses equal to target).
double snr_nominal_best(std::span<const double> responses, double target);

// Dispatch on the objective kind; nominal_best requires objective.target.
double snr_for_objective(const QualityCharacteristic& objective,
                         std::span<const double> responses);

struct QualityLoss {
  double expected_loss = 0.0;   // mean((y - T)^2)
  double variance_part = 0.0;   // population variance
  double bias_part = 0.0;       // (mean - T)^2
};

// Mean quality loss and its variance + bias decomposition
// (expected_loss == variance_part + bias_part).
QualityLoss quality_loss(std::span<const double> responses, double target);

// Per-inner-run mean and SNR for one objective.
struct SnrSeries {
  QualityCharacteristic objective;
  struct Entry {
    double mean = 0.0;
    double snr = 0.0;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> per_run;

  bool operator==(const SnrSeries&) const = default;
};

SnrSeries snr_series(const ResponseMatrix& responses);

}  // namespace robustdoe
