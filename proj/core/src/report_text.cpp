#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <string>

#include "robustdoe/report.hpp"

namespace robustdoe {

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string rcol(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string lcol(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string banner_line(const char* title) {
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%d %H:%M:%S", std::localtime(&now));
  return std::string(title) + "  (" + stamp + ")\n\n";
}

std::string threshold_text(const Threshold& t) {
  return std::string(comparator_text(t.comparator)) + " " + fixed(t.value, 0) + " " + t.unit;
}

}  // namespace

std::string report_to_text(const AnalysisReport& r, bool banner) {
  std::ostringstream out;
  if (banner) out << banner_line("robustdoe analysis report");

  out << "design: " << r.inner_array << " x " << r.outer_array << "   response source: "
      << (r.response_source.kind == ResponseSourceSpec::Kind::grd
              ? std::string("grd")
              : "snr:" + r.response_source.objective)
      << "   rho: " << fixed(r.rho, 3) << "\n\n";

  const std::size_t w = 18;
  out << "signal-to-noise ratios (dB)\n";
  out << lcol("run", 5);
  for (const auto& s : r.snr)
    out << rcol(s.objective.name + ":mean", w) << rcol(s.objective.name + ":snr", w);
  out << "\n";
  const std::size_t m = r.snr.empty() ? 0 : r.snr.front().per_run.size();
  for (std::size_t i = 0; i < m; ++i) {
    out << lcol(std::to_string(i + 1), 5);
    for (const auto& s : r.snr)
      out << rcol(fixed(s.per_run[i].mean, 3), w) << rcol(fixed(s.per_run[i].snr, 2), w);
    out << "\n";
  }
  out << "\n";

  out << "grey relational analysis (normalized snr, coefficients, grade)\n";
  out << lcol("run", 5);
  for (const auto& name : r.objectives) out << rcol("norm:" + name, w);
  for (const auto& name : r.objectives) out << rcol("grc:" + name, w);
  out << rcol("grd", 10) << rcol("rank", 6) << "\n";
  for (std::size_t i = 0; i < r.grey.grd.size(); ++i) {
    out << lcol(std::to_string(i + 1), 5);
    for (std::size_t k = 0; k < r.normalized.values.cols; ++k)
      out << rcol(fixed(r.normalized.values.at(i, k), 4), w);
    for (std::size_t k = 0; k < r.grey.grc.cols; ++k)
      out << rcol(fixed(r.grey.grc.at(i, k), 4), w);
    out << rcol(fixed(r.grey.grd[i], 4), 10) << rcol(std::to_string(r.grey.rank[i]), 6) << "\n";
  }
  if (r.grey.has_ties) out << "note: tied grades ranked by run order\n";
  out << "\n";

  out << "range analysis\n";
  std::size_t max_levels = 0;
  for (const auto& e : r.range.factors) max_levels = std::max(max_levels, e.level_means.size());
  out << lcol("factor", 8);
  for (std::size_t l = 1; l <= max_levels; ++l) out << rcol("level" + std::to_string(l), 12);
  out << rcol("range", 12) << rcol("optimal", 10) << "\n";
  for (const auto& e : r.range.factors) {
    out << lcol(e.factor, 8);
    for (std::size_t l = 0; l < max_levels; ++l)
      out << (l < e.level_means.size() ? rcol(fixed(e.level_means[l], 4), 12) : rcol("", 12));
    out << rcol(fixed(e.range, 4), 12)
        << rcol(std::to_string(e.optimal_level) + (e.tie ? " (tie)" : ""), 10) << "\n";
  }
  out << "factor influence order:";
  for (std::size_t i = 0; i < r.range.factor_order.size(); ++i)
    out << (i == 0 ? " " : " > ") << r.range.factor_order[i];
  out << "\n";
  out << "optimal combination:";
  for (const auto& [factor, level] : r.optimal_combination) out << " " << factor << level;
  out << "\n\n";

  out << "anova\n";
  out << lcol("source", 8) << rcol("ss", 12) << rcol("df", 5) << rcol("ms", 12) << rcol("F", 10)
      << rcol("p", 10) << "\n";
  bool any_insignificant = false;
  for (const auto& row : r.anova.factors) {
    out << lcol(row.factor, 8) << rcol(fixed(row.ss, 4), 12) << rcol(std::to_string(row.df), 5)
        << rcol(fixed(row.ms, 4), 12);
    out << rcol(row.f ? fixed(*row.f, 3) : "-", 10);
    if (row.p) {
      out << rcol(fixed(*row.p, 3), 10);
      if (*row.p > 0.05) any_insignificant = true;
    } else {
      out << rcol("-", 10);
    }
    out << "\n";
  }
  out << lcol("error", 8) << rcol(fixed(r.anova.ss_error, 4), 12)
      << rcol(std::to_string(r.anova.df_error), 5)
      << rcol(r.anova.no_error_term ? "-" : fixed(r.anova.ms_error, 4), 12) << "\n";
  out << lcol("total", 8) << rcol(fixed(r.anova.ss_total, 4), 12)
      << rcol(std::to_string(r.anova.df_total), 5) << "\n";
  if (r.anova.no_error_term)
    out << "note: no residual degrees of freedom; F and p omitted\n";
  else if (any_insignificant)
    out << "note: factors with p > 0.05 are not significant; the optimal combination above\n"
           "      is selected from level means regardless of significance\n";
  out << "\n";

  if (!r.criteria.empty()) {
    out << "criteria\n";
    out << lcol("objective", 16) << lcol("threshold", 14) << rcol("worst", 12)
        << rcol("violations", 12) << rcol("verdict", 9) << "\n";
    for (const auto& v : r.criteria) {
      out << lcol(v.objective, 16) << lcol(threshold_text(v.threshold), 14)
          << rcol(fixed(v.worst, 2), 12) << rcol(std::to_string(v.violations), 12)
          << rcol(v.pass ? "pass" : "FAIL", 9) << "\n";
    }
  }

  return std::move(out).str();
}

std::string confirmation_to_text(const ConfirmationReport& r, bool banner) {
  std::ostringstream out;
  if (banner) out << banner_line("robustdoe confirmation report");

  for (const auto& e : r.entries) {
    out << e.objective << "\n";
    out << lcol("", 10) << rcol("before", 14) << rcol("after", 14) << rcol("change", 12) << "\n";
    out << lcol("mean", 10) << rcol(fixed(e.before_stats.mean, 3), 14)
        << rcol(fixed(e.after_stats.mean, 3), 14)
        << rcol(fixed(-100.0 * e.mean_reduction, 1) + "%", 12) << "\n";
    out << lcol("std", 10) << rcol(fixed(e.before_stats.std_population, 3), 14)
        << rcol(fixed(e.after_stats.std_population, 3), 14)
        << rcol(fixed(-100.0 * e.std_reduction, 1) + "%", 12) << "\n";
    out << lcol("snr", 10) << rcol(fixed(e.before_snr, 2), 14)
        << rcol(fixed(e.after_snr, 2), 14)
        << rcol(fixed(100.0 * e.snr_improvement, 1) + "%", 12) << "\n";
    if (e.verdict.applicable) {
      out << lcol("verdict", 10) << rcol(e.verdict.before_pass ? "pass" : "FAIL", 14)
          << rcol(e.verdict.after_pass ? "pass" : "FAIL", 14) << "\n";
    }
    out << "\n";
  }
  return std::move(out).str();
}

}  // namespace robustdoe
