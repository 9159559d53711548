#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robustdoe/domain.hpp"
#include "robustdoe/effects.hpp"
#include "robustdoe/gra.hpp"
#include "robustdoe/orthogonal_array.hpp"
#include "robustdoe/snr.hpp"

namespace robustdoe {

// Threshold check over every cell of one objective's response matrix.
struct CriterionVerdict {
  std::string objective;
  Threshold threshold;
  double worst = 0.0;   // value closest to (or beyond) the limit
  int violations = 0;   // number of offending cells
  bool pass = true;

  bool operator==(const CriterionVerdict&) const = default;
};

// Everything the analyze pipeline produces for one crossed design.
struct AnalysisReport {
  std::string inner_array;
  std::string outer_array;
  std::vector<std::string> objectives;
  ResponseSourceSpec response_source;
  double rho = 0.5;
  std::optional<std::vector<double>> weights;

  std::vector<SnrSeries> snr;              // one series per objective
  NormalizedSeries normalized;             // m x k, from unrounded SNRs
  GreyResult grey;
  std::vector<double> analysis_response;   // vector fed to range/ANOVA
  RangeTable range;
  AnovaTable anova;
  std::vector<std::pair<std::string, int>> optimal_combination;
  std::vector<CriterionVerdict> criteria;

  bool operator==(const AnalysisReport&) const = default;
};

// Runs SNR -> GRA -> range/ANOVA -> criteria for the given design and
// responses (one ResponseMatrix per spec objective, in spec order).
AnalysisReport build_report(const DesignSpec& spec, const CrossedDesign& design,
                            const std::vector<ResponseMatrix>& responses, double rho,
                            const std::optional<std::vector<double>>& weights);

// JSON serialization round-trips bit-exactly: report_from_json(report_to_json(r)) == r.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(std::string_view json_text);

std::string confirmation_to_json(const ConfirmationReport& report);
ConfirmationReport confirmation_from_json(std::string_view json_text);

// Fixed-width text rendering. The banner line carries a timestamp and is
// omitted when `banner` is false (deterministic output).
std::string report_to_text(const AnalysisReport& report, bool banner);
std::string confirmation_to_text(const ConfirmationReport& report, bool banner);

}  // namespace robustdoe
