#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "robustdoe/error.hpp"
#include "robustdoe/matrix.hpp"

namespace robustdoe {

struct OrthogonalArray;  // orthogonal_array.hpp

enum class FactorKind { controllable, noise };

// One experimental factor with its enumerated physical levels.
// Level indices are 1-based throughout the toolkit.
struct Factor {
  std::string name;
  FactorKind kind = FactorKind::controllable;
  std::string unit;            // display only, no unit algebra
  std::vector<double> levels;  // >= 2 finite, pairwise distinct values

  int level_count() const { return static_cast<int>(levels.size()); }
  double value_at(int level) const;  // 1-based, throws IndexOutOfRange

  bool operator==(const Factor&) const = default;
};

enum class ObjectiveKind { smaller_better, larger_better, nominal_best };

enum class Comparator { le, lt, ge, gt };

std::string_view comparator_text(Comparator c);
std::optional<Comparator> parse_comparator(std::string_view text);

// Pass/fail constraint on a response value, e.g. "<= 20 g".
struct Threshold {
  Comparator comparator = Comparator::le;
  double value = 0.0;
  std::string unit;

  bool satisfied(double x) const;

  bool operator==(const Threshold&) const = default;
};

struct QualityCharacteristic {
  std::string name;
  ObjectiveKind kind = ObjectiveKind::smaller_better;
  std::optional<double> target;  // present exactly when kind is nominal_best
  std::optional<Threshold> threshold;

  bool operator==(const QualityCharacteristic&) const = default;
};

// Raw responses for one objective: one row per inner (design) run, one
// column per outer (noise) run.
struct ResponseMatrix {
  QualityCharacteristic objective;
  std::string unit;
  Matrix values;

  bool operator==(const ResponseMatrix&) const = default;
};

struct SummaryStats {
  double mean = 0.0;
  double std_population = 0.0;  // divide-by-n convention
  std::size_t count = 0;

  bool operator==(const SummaryStats&) const = default;
};

// Mean and population standard deviation of a non-empty sample.
// Throws EmptyInput / InvalidArgument (non-finite values).
SummaryStats summarize(std::span<const double> values);

// Which response vector drives range analysis / ANOVA.
struct ResponseSourceSpec {
  enum class Kind { grd, snr };
  Kind kind = Kind::grd;
  std::string objective;  // set when kind == snr

  bool operator==(const ResponseSourceSpec&) const = default;
};

struct GraConfig {
  std::optional<double> rho;
  std::optional<std::vector<double>> weights;

  bool operator==(const GraConfig&) const = default;
};

// Parsed design specification: factors, objectives, array selection and
// column assignment, GRA settings.
struct DesignSpec {
  std::vector<Factor> factors;
  std::vector<QualityCharacteristic> objectives;
  std::string inner_array;
  std::string outer_array;
  // Entry k assigns array column k+1; nullopt leaves the column unused.
  std::vector<std::optional<std::string>> inner_assignment;
  std::vector<std::optional<std::string>> outer_assignment;
  GraConfig gra;
  ResponseSourceSpec analysis;
  std::string notes;

  std::vector<Factor> controllable_factors() const;
  std::vector<Factor> noise_factors() const;
  const Factor* find_factor(std::string_view name) const;
  const QualityCharacteristic* find_objective(std::string_view name) const;

  bool operator==(const DesignSpec&) const = default;
};

// Collects every violation instead of failing on the first. A valid spec
// yields an empty list. Array arguments are optional; when provided, the
// assignment is checked against the arrays' shapes (column counts and
// per-column level counts).
std::vector<Violation> validate_design_spec(const DesignSpec& spec,
                                            const OrthogonalArray* inner = nullptr,
                                            const OrthogonalArray* outer = nullptr);

}  // namespace robustdoe
