#include "robustdoe/report.hpp"

#include <algorithm>
#include <string>

#include <json.hpp>

namespace robustdoe {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw Error(Errc::parse_error, "report: " + message);
}

}  // namespace

AnalysisReport build_report(const DesignSpec& spec, const CrossedDesign& design,
                            const std::vector<ResponseMatrix>& responses, double rho,
                            const std::optional<std::vector<double>>& weights) {
  if (responses.size() != spec.objectives.size())
    throw Error(Errc::shape_mismatch, "expected one response matrix per objective");

  AnalysisReport report;
  report.inner_array = design.inner.name;
  report.outer_array = design.outer.name;
  report.response_source = spec.analysis;
  report.rho = rho;
  report.weights = weights;

  const auto m = static_cast<std::size_t>(design.inner.runs);
  const auto n = static_cast<std::size_t>(design.outer.runs);
  for (std::size_t k = 0; k < responses.size(); ++k) {
    const auto& r = responses[k];
    if (r.values.rows != m || r.values.cols != n)
      throw Error(Errc::shape_mismatch,
                  "responses for '" + r.objective.name + "' are " + std::to_string(r.values.rows) +
                      "x" + std::to_string(r.values.cols) + ", design needs " + std::to_string(m) +
                      "x" + std::to_string(n));
    report.objectives.push_back(r.objective.name);
  }

  // per-objective SNR, then GRA over the unrounded SNR matrix
  Matrix snr_matrix(m, responses.size());
  for (std::size_t k = 0; k < responses.size(); ++k) {
    report.snr.push_back(snr_series(responses[k]));
    for (std::size_t i = 0; i < m; ++i) snr_matrix.at(i, k) = report.snr[k].per_run[i].snr;
  }
  report.normalized = normalize_snr(snr_matrix);
  report.grey = grey_relational_analysis(report.normalized, rho, weights);

  // response vector for factor analysis: GRD by default, or one SNR column
  if (spec.analysis.kind == ResponseSourceSpec::Kind::grd) {
    report.analysis_response = report.grey.grd;
  } else {
    const auto it = std::find(report.objectives.begin(), report.objectives.end(),
                              spec.analysis.objective);
    if (it == report.objectives.end())
      throw Error(Errc::invalid_argument,
                  "analysis source objective '" + spec.analysis.objective + "' has no responses");
    const auto k = static_cast<std::size_t>(it - report.objectives.begin());
    report.analysis_response = snr_matrix.column(k);
  }

  report.range = range_analysis(report.analysis_response, design.inner, design.inner_factors);
  report.anova = anova(report.analysis_response, design.inner, design.inner_factors);
  report.optimal_combination = report.range.optimal_combination();

  for (const auto& r : responses) {
    if (!r.objective.threshold) continue;
    const Threshold& t = *r.objective.threshold;
    CriterionVerdict v;
    v.objective = r.objective.name;
    v.threshold = t;
    const bool lower_is_safe = t.comparator == Comparator::le || t.comparator == Comparator::lt;
    v.worst = r.values.data.front();
    for (double x : r.values.data) {
      if (!t.satisfied(x)) ++v.violations;
      if (lower_is_safe ? x > v.worst : x < v.worst) v.worst = x;
    }
    v.pass = v.violations == 0;
    report.criteria.push_back(std::move(v));
  }

  return report;
}

// ---------------------------------------------------------------------------
// JSON serialization. Doubles rely on the writer's exact round-trip encoding,
// so report_from_json(report_to_json(r)) == r holds bit for bit.

namespace {

json matrix_to_json(const Matrix& x) {
  json rows = json::array();
  for (std::size_t i = 0; i < x.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < x.cols; ++j) row.push_back(x.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) fail("matrix must be a non-empty array of rows");
  Matrix out(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < out.rows; ++i) {
    if (!rows[i].is_array() || rows[i].size() != out.cols) fail("ragged matrix");
    for (std::size_t j = 0; j < out.cols; ++j) out.at(i, j) = rows[i][j].get<double>();
  }
  return out;
}

std::string source_text(const ResponseSourceSpec& s) {
  return s.kind == ResponseSourceSpec::Kind::grd ? "grd" : "snr:" + s.objective;
}

ResponseSourceSpec source_from_text(const std::string& text) {
  ResponseSourceSpec out;
  if (text == "grd") {
    out.kind = ResponseSourceSpec::Kind::grd;
  } else if (text.rfind("snr:", 0) == 0) {
    out.kind = ResponseSourceSpec::Kind::snr;
    out.objective = text.substr(4);
  } else {
    fail("unknown response source '" + text + "'");
  }
  return out;
}

json threshold_to_json(const Threshold& t) {
  return json{{"comparator", std::string(comparator_text(t.comparator))},
              {"value", t.value},
              {"unit", t.unit}};
}

Threshold threshold_from_json(const json& j) {
  Threshold t;
  const auto cmp = parse_comparator(j.at("comparator").get<std::string>());
  if (!cmp) fail("bad threshold comparator");
  t.comparator = *cmp;
  t.value = j.at("value").get<double>();
  t.unit = j.at("unit").get<std::string>();
  return t;
}

json objective_to_json(const QualityCharacteristic& o) {
  json j;
  j["name"] = o.name;
  switch (o.kind) {
    case ObjectiveKind::smaller_better: j["kind"] = "smaller-better"; break;
    case ObjectiveKind::larger_better: j["kind"] = "larger-better"; break;
    case ObjectiveKind::nominal_best: j["kind"] = "nominal-best"; break;
  }
  if (o.target) j["target"] = *o.target;
  if (o.threshold) j["threshold"] = threshold_to_json(*o.threshold);
  return j;
}

QualityCharacteristic objective_from_json(const json& j) {
  QualityCharacteristic o;
  o.name = j.at("name").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "smaller-better")
    o.kind = ObjectiveKind::smaller_better;
  else if (kind == "larger-better")
    o.kind = ObjectiveKind::larger_better;
  else if (kind == "nominal-best")
    o.kind = ObjectiveKind::nominal_best;
  else
    fail("bad objective kind '" + kind + "'");
  if (j.contains("target")) o.target = j["target"].get<double>();
  if (j.contains("threshold")) o.threshold = threshold_from_json(j["threshold"]);
  return o;
}

json stats_to_json(const SummaryStats& s) {
  return json{{"mean", s.mean}, {"std", s.std_population}, {"count", s.count}};
}

SummaryStats stats_from_json(const json& j) {
  SummaryStats s;
  s.mean = j.at("mean").get<double>();
  s.std_population = j.at("std").get<double>();
  s.count = j.at("count").get<std::size_t>();
  return s;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  json j;
  j["inner_array"] = r.inner_array;
  j["outer_array"] = r.outer_array;
  j["objectives"] = r.objectives;
  j["response_source"] = source_text(r.response_source);
  j["rho"] = r.rho;
  if (r.weights) j["weights"] = *r.weights;

  json snr = json::array();
  for (const auto& series : r.snr) {
    json per_run = json::array();
    for (const auto& e : series.per_run)
      per_run.push_back(json{{"mean", e.mean}, {"snr", e.snr}});
    snr.push_back(json{{"objective", objective_to_json(series.objective)},
                       {"per_run", std::move(per_run)}});
  }
  j["snr"] = std::move(snr);

  j["normalized"] = json{
      {"source", r.normalized.source == NormalizationSource::snr ? "snr" : "raw-response"},
      {"values", matrix_to_json(r.normalized.values)}};

  j["grey"] = json{{"grc", matrix_to_json(r.grey.grc)},
                   {"grd", r.grey.grd},
                   {"rank", r.grey.rank},
                   {"rho", r.grey.rho},
                   {"has_ties", r.grey.has_ties}};

  j["analysis_response"] = r.analysis_response;

  json range_factors = json::array();
  for (const auto& e : r.range.factors)
    range_factors.push_back(json{{"factor", e.factor},
                                 {"level_means", e.level_means},
                                 {"range", e.range},
                                 {"optimal_level", e.optimal_level},
                                 {"tie", e.tie}});
  j["range"] = json{{"factors", std::move(range_factors)},
                    {"factor_order", r.range.factor_order}};

  json anova_factors = json::array();
  for (const auto& row : r.anova.factors) {
    json jr{{"factor", row.factor}, {"ss", row.ss}, {"df", row.df}, {"ms", row.ms}};
    if (row.f) jr["f"] = *row.f;
    if (row.p) jr["p"] = *row.p;
    anova_factors.push_back(std::move(jr));
  }
  j["anova"] = json{{"factors", std::move(anova_factors)},
                    {"ss_error", r.anova.ss_error},
                    {"df_error", r.anova.df_error},
                    {"ms_error", r.anova.ms_error},
                    {"ss_total", r.anova.ss_total},
                    {"df_total", r.anova.df_total},
                    {"no_error_term", r.anova.no_error_term}};

  json combo = json::array();
  for (const auto& [factor, level] : r.optimal_combination)
    combo.push_back(json{{"factor", factor}, {"level", level}});
  j["optimal_combination"] = std::move(combo);

  json criteria = json::array();
  for (const auto& v : r.criteria)
    criteria.push_back(json{{"objective", v.objective},
                            {"threshold", threshold_to_json(v.threshold)},
                            {"worst", v.worst},
                            {"violations", v.violations},
                            {"pass", v.pass}});
  j["criteria"] = std::move(criteria);

  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) fail("invalid JSON");

  AnalysisReport r;
  r.inner_array = j.at("inner_array").get<std::string>();
  r.outer_array = j.at("outer_array").get<std::string>();
  r.objectives = j.at("objectives").get<std::vector<std::string>>();
  r.response_source = source_from_text(j.at("response_source").get<std::string>());
  r.rho = j.at("rho").get<double>();
  if (j.contains("weights")) r.weights = j["weights"].get<std::vector<double>>();

  for (const auto& series : j.at("snr")) {
    SnrSeries s;
    s.objective = objective_from_json(series.at("objective"));
    for (const auto& e : series.at("per_run"))
      s.per_run.push_back({e.at("mean").get<double>(), e.at("snr").get<double>()});
    r.snr.push_back(std::move(s));
  }

  const auto& norm = j.at("normalized");
  r.normalized.source = norm.at("source").get<std::string>() == "snr"
                            ? NormalizationSource::snr
                            : NormalizationSource::raw_response;
  r.normalized.values = matrix_from_json(norm.at("values"));

  const auto& grey = j.at("grey");
  r.grey.grc = matrix_from_json(grey.at("grc"));
  r.grey.grd = grey.at("grd").get<std::vector<double>>();
  r.grey.rank = grey.at("rank").get<std::vector<int>>();
  r.grey.rho = grey.at("rho").get<double>();
  r.grey.has_ties = grey.at("has_ties").get<bool>();

  r.analysis_response = j.at("analysis_response").get<std::vector<double>>();

  const auto& range = j.at("range");
  for (const auto& e : range.at("factors")) {
    RangeEntry re;
    re.factor = e.at("factor").get<std::string>();
    re.level_means = e.at("level_means").get<std::vector<double>>();
    re.range = e.at("range").get<double>();
    re.optimal_level = e.at("optimal_level").get<int>();
    re.tie = e.at("tie").get<bool>();
    r.range.factors.push_back(std::move(re));
  }
  r.range.factor_order = range.at("factor_order").get<std::vector<std::string>>();

  const auto& anova_j = j.at("anova");
  for (const auto& e : anova_j.at("factors")) {
    AnovaRow row;
    row.factor = e.at("factor").get<std::string>();
    row.ss = e.at("ss").get<double>();
    row.df = e.at("df").get<int>();
    row.ms = e.at("ms").get<double>();
    if (e.contains("f")) row.f = e["f"].get<double>();
    if (e.contains("p")) row.p = e["p"].get<double>();
    r.anova.factors.push_back(std::move(row));
  }
  r.anova.ss_error = anova_j.at("ss_error").get<double>();
  r.anova.df_error = anova_j.at("df_error").get<int>();
  r.anova.ms_error = anova_j.at("ms_error").get<double>();
  r.anova.ss_total = anova_j.at("ss_total").get<double>();
  r.anova.df_total = anova_j.at("df_total").get<int>();
  r.anova.no_error_term = anova_j.at("no_error_term").get<bool>();

  for (const auto& e : j.at("optimal_combination"))
    r.optimal_combination.emplace_back(e.at("factor").get<std::string>(),
                                       e.at("level").get<int>());

  for (const auto& e : j.at("criteria")) {
    CriterionVerdict v;
    v.objective = e.at("objective").get<std::string>();
    v.threshold = threshold_from_json(e.at("threshold"));
    v.worst = e.at("worst").get<double>();
    v.violations = e.at("violations").get<int>();
    v.pass = e.at("pass").get<bool>();
    r.criteria.push_back(std::move(v));
  }

  return r;
}

std::string confirmation_to_json(const ConfirmationReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json je{{"objective", e.objective},
            {"before", stats_to_json(e.before_stats)},
            {"after", stats_to_json(e.after_stats)},
            {"before_snr", e.before_snr},
            {"after_snr", e.after_snr},
            {"mean_reduction", e.mean_reduction},
            {"std_reduction", e.std_reduction},
            {"snr_improvement", e.snr_improvement}};
    if (e.verdict.applicable)
      je["verdict"] = json{{"before_worst", e.verdict.before_worst},
                           {"after_worst", e.verdict.after_worst},
                           {"before_pass", e.verdict.before_pass},
                           {"after_pass", e.verdict.after_pass}};
    entries.push_back(std::move(je));
  }
  return json{{"entries", std::move(entries)}}.dump(2) + "\n";
}

ConfirmationReport confirmation_from_json(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) fail("invalid JSON");
  ConfirmationReport out;
  for (const auto& je : j.at("entries")) {
    ConfirmationEntry e;
    e.objective = je.at("objective").get<std::string>();
    e.before_stats = stats_from_json(je.at("before"));
    e.after_stats = stats_from_json(je.at("after"));
    e.before_snr = je.at("before_snr").get<double>();
    e.after_snr = je.at("after_snr").get<double>();
    e.mean_reduction = je.at("mean_reduction").get<double>();
    e.std_reduction = je.at("std_reduction").get<double>();
    e.snr_improvement = je.at("snr_improvement").get<double>();
    if (je.contains("verdict")) {
      e.verdict.applicable = true;
      e.verdict.before_worst = je["verdict"].at("before_worst").get<double>();
      e.verdict.after_worst = je["verdict"].at("after_worst").get<double>();
      e.verdict.before_pass = je["verdict"].at("before_pass").get<bool>();
      e.verdict.after_pass = je["verdict"].at("after_pass").get<bool>();
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace robustdoe
