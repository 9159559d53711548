#pragma once

#include <optional>
#include <span>
#include <vector>

#include "robustdoe/domain.hpp"
#include "robustdoe/matrix.hpp"

namespace robustdoe {

// Grey relational analysis over an m x k series (m runs, k objectives).

enum class NormalizationSource { raw_response, snr };

struct NormalizedSeries {
  Matrix values;  // entries in [0, 1]
  NormalizationSource source = NormalizationSource::raw_response;

  bool operator==(const NormalizedSeries&) const = default;
};

// Min-max normalization per column:
//   larger-better   (x - min) / (max - min)
//   smaller-better  (max - x) / (max - min)
//   nominal-best    1 - |x - target| / max_i |x_i - target|
// A constant column (max == min, or no deviation from target) throws
// ZeroRange; callers must drop or perturb such a column.
NormalizedSeries normalize(const Matrix& series, std::span<const ObjectiveKind> kinds,
                           std::span<const std::optional<double>> targets = {});

// SNR series are larger-better by construction.
NormalizedSeries normalize_snr(const Matrix& snr_series);

// Grey relational coefficient against the all-ones reference sequence:
//   delta_ik = 1 - x_ik,  xi = (dmin + rho*dmax) / (delta + rho*dmax)
// with dmin/dmax taken over all i,k. rho outside (0,1] throws InvalidRho.
Matrix grey_relational_coefficients(const NormalizedSeries& normalized, double rho);

struct GradeResult {
  std::vector<double> grd;  // one grade per run
  std::vector<int> rank;    // 1 = best; ties broken by lower run index
  bool has_ties = false;

  bool operator==(const GradeResult&) const = default;
};

// Weighted mean of each run's coefficients. Weights default to uniform 1/k;
// when given they must be nonnegative and sum to 1 (+-1e-9), else
// InvalidWeights.
GradeResult grey_relational_grade(const Matrix& grc,
                                  const std::optional<std::vector<double>>& weights = std::nullopt);

struct GreyResult {
  Matrix grc;
  std::vector<double> grd;
  std::vector<int> rank;
  double rho = 0.5;
  bool has_ties = false;

  bool operator==(const GreyResult&) const = default;
};

GreyResult grey_relational_analysis(const NormalizedSeries& normalized, double rho,
                                    const std::optional<std::vector<double>>& weights = std::nullopt);

}  // namespace robustdoe
