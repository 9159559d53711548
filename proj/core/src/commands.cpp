#include "robustdoe/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "robustdoe/csv.hpp"
#include "robustdoe/report.hpp"
#include "robustdoe/spec_io.hpp"
#include "robustdoe/surrogate.hpp"

namespace robustdoe {

namespace {

struct LoadedDesign {
  DesignSpec spec;
  CrossedDesign design;
};

// Loads and fully validates a spec, resolving its arrays from the catalog.
LoadedDesign load_and_validate(const std::filesystem::path& spec_path) {
  LoadedDesign out;
  out.spec = load_design_spec(spec_path);
  const OrthogonalArray& inner = catalog_lookup(out.spec.inner_array);
  const OrthogonalArray& outer = catalog_lookup(out.spec.outer_array);

  const auto violations = validate_design_spec(out.spec, &inner, &outer);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << spec_path.string() << " is invalid:";
    for (const auto& v : violations) msg << "\n  " << v.where << ": " << v.message;
    throw Error(Errc::invalid_argument, msg.str());
  }

  out.design = cross(inner, outer, out.spec);
  return out;
}

std::vector<ResponseMatrix> load_responses(const DesignSpec& spec, const CrossedDesign& design,
                                           const std::filesystem::path& dir) {
  std::vector<ResponseMatrix> out;
  for (const auto& objective : spec.objectives) {
    const auto path = dir / (objective.name + ".csv");
    ResponseMatrix r;
    r.objective = objective;
    r.unit = objective.threshold ? objective.threshold->unit : "";
    r.values = read_response_csv(path);
    const auto m = static_cast<std::size_t>(design.inner.runs);
    const auto n = static_cast<std::size_t>(design.outer.runs);
    if (r.values.rows != m || r.values.cols != n)
      throw Error(Errc::shape_mismatch,
                  path.string() + ": got " + std::to_string(r.values.rows) + "x" +
                      std::to_string(r.values.cols) + ", expected " + std::to_string(m) + "x" +
                      std::to_string(n) + " (" + design.inner.name + " x " + design.outer.name +
                      ")");
    out.push_back(std::move(r));
  }
  return out;
}

Matrix snr_matrix_for(const std::vector<ResponseMatrix>& responses,
                      std::vector<SnrSeries>& series_out) {
  const std::size_t m = responses.front().values.rows;
  Matrix snr(m, responses.size());
  for (std::size_t k = 0; k < responses.size(); ++k) {
    series_out.push_back(snr_series(responses[k]));
    for (std::size_t i = 0; i < m; ++i) snr.at(i, k) = series_out[k].per_run[i].snr;
  }
  return snr;
}

}  // namespace

double resolve_rho(const DesignSpec& spec, std::optional<double> flag) {
  double rho = 0.5;
  if (spec.gra.rho) rho = *spec.gra.rho;
  if (const char* env = std::getenv("ROBUST_DOE_RHO"); env && *env) {
    double v = 0.0;
    const char* last = env + std::string_view(env).size();
    const auto res = std::from_chars(env, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
      throw Error(Errc::invalid_argument,
                  std::string("ROBUST_DOE_RHO is not a number: '") + env + "'");
    rho = v;
  }
  if (flag) rho = *flag;
  if (!(rho > 0.0 && rho <= 1.0))
    throw Error(Errc::invalid_rho, "rho must lie in (0, 1]");
  return rho;
}

void cmd_design(const std::filesystem::path& spec_path, const std::filesystem::path& out_path) {
  const auto loaded = load_and_validate(spec_path);
  atomic_write_file(out_path, format_design_csv(loaded.design));
}

void cmd_simulate(const std::filesystem::path& spec_path,
                  const std::filesystem::path& params_path,
                  const std::filesystem::path& out_dir) {
  const auto loaded = load_and_validate(spec_path);
  const auto config = load_simulation_config(params_path);
  config.params.validate();

  for (const auto& [role, factor] : config.factor_roles)
    if (!loaded.spec.find_factor(factor))
      throw Error(Errc::invalid_argument,
                  "params map role '" + role + "' to unknown factor '" + factor + "'");
  for (const auto& objective : loaded.spec.objectives)
    if (objective.name != config.acceleration_objective &&
        objective.name != config.deflection_objective)
      throw Error(Errc::invalid_argument, "objective '" + objective.name +
                                              "' has no surrogate output; map it in the params "
                                              "file");

  const int m = loaded.design.inner.runs;
  const int n = loaded.design.outer.runs;
  Matrix acceleration(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  Matrix deflection(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::map<std::string, double> values;
      for (const auto& rv : resolve_run(loaded.design, i, j)) values[rv.factor] = rv.value;
      auto value_of = [&](const std::string& role) {
        const auto it = values.find(config.factor_roles.at(role));
        if (it == values.end())
          throw Error(Errc::invalid_argument, "factor for role '" + role + "' is not assigned");
        return it->second;
      };
      CrashInputs inputs;
      inputs.post_thickness_mm = value_of("post_thickness");
      inputs.beam_thickness_mm = value_of("beam_thickness");
      inputs.post_spacing_mm = value_of("post_spacing");
      inputs.velocity_kmh = value_of("velocity");
      inputs.mass_kg = value_of("mass");
      inputs.yield_stress_mpa = value_of("yield_stress");
      const CrashResponse response = crash_response(inputs, config.params);
      acceleration.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          response.acceleration_g;
      deflection.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          response.deflection_mm;
    }
  }

  std::filesystem::create_directories(out_dir);
  for (const auto& objective : loaded.spec.objectives) {
    const Matrix& values =
        objective.name == config.acceleration_objective ? acceleration : deflection;
    atomic_write_file(out_dir / (objective.name + ".csv"), format_response_csv(values));
  }
}

void cmd_snr(const std::filesystem::path& spec_path, const std::filesystem::path& responses_dir,
             const std::filesystem::path& out_path) {
  const auto loaded = load_and_validate(spec_path);
  const auto responses = load_responses(loaded.spec, loaded.design, responses_dir);

  std::vector<SnrSeries> series;
  snr_matrix_for(responses, series);

  std::string csv = "run_id";
  for (const auto& s : series) csv += "," + s.objective.name + "_mean," + s.objective.name + "_snr";
  csv += "\n";
  for (std::size_t i = 0; i < series.front().per_run.size(); ++i) {
    csv += std::to_string(i + 1);
    for (const auto& s : series)
      csv += "," + format_double(s.per_run[i].mean) + "," + format_double(s.per_run[i].snr);
    csv += "\n";
  }
  atomic_write_file(out_path, csv);
}

void cmd_gra(const std::filesystem::path& spec_path, const std::filesystem::path& responses_dir,
             const std::filesystem::path& out_path, std::optional<double> rho_flag) {
  const auto loaded = load_and_validate(spec_path);
  const auto responses = load_responses(loaded.spec, loaded.design, responses_dir);
  const double rho = resolve_rho(loaded.spec, rho_flag);

  std::vector<SnrSeries> series;
  const Matrix snr = snr_matrix_for(responses, series);
  const NormalizedSeries normalized = normalize_snr(snr);
  const GreyResult grey = grey_relational_analysis(normalized, rho, loaded.spec.gra.weights);

  std::string csv = "run_id";
  for (const auto& o : loaded.spec.objectives) csv += ",norm_" + o.name;
  for (const auto& o : loaded.spec.objectives) csv += ",grc_" + o.name;
  csv += ",grd,rank\n";
  for (std::size_t i = 0; i < grey.grd.size(); ++i) {
    csv += std::to_string(i + 1);
    for (std::size_t k = 0; k < normalized.values.cols; ++k)
      csv += "," + format_double(normalized.values.at(i, k));
    for (std::size_t k = 0; k < grey.grc.cols; ++k) csv += "," + format_double(grey.grc.at(i, k));
    csv += "," + format_double(grey.grd[i]) + "," + std::to_string(grey.rank[i]) + "\n";
  }
  atomic_write_file(out_path, csv);
}

void cmd_analyze(const std::filesystem::path& spec_path,
                 const std::filesystem::path& responses_dir,
                 const std::filesystem::path& out_path, std::optional<double> rho_flag,
                 ReportFormat format, bool banner) {
  const auto loaded = load_and_validate(spec_path);
  const auto responses = load_responses(loaded.spec, loaded.design, responses_dir);
  const double rho = resolve_rho(loaded.spec, rho_flag);

  const AnalysisReport report =
      build_report(loaded.spec, loaded.design, responses, rho, loaded.spec.gra.weights);
  atomic_write_file(out_path, format == ReportFormat::json ? report_to_json(report)
                                                           : report_to_text(report, banner));
}

void cmd_confirm(const std::filesystem::path& spec_path,
                 const std::filesystem::path& before_dir,
                 const std::filesystem::path& after_dir,
                 const std::filesystem::path& out_path, ReportFormat format, bool banner) {
  const auto spec = load_design_spec(spec_path);
  // Arrays are irrelevant for confirmation; validate factors/objectives only.
  const auto violations = validate_design_spec(spec);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << spec_path.string() << " is invalid:";
    for (const auto& v : violations) msg << "\n  " << v.where << ": " << v.message;
    throw Error(Errc::invalid_argument, msg.str());
  }

  ConfirmationReport report;
  for (const auto& objective : spec.objectives) {
    const Matrix before = read_response_csv(before_dir / (objective.name + ".csv"));
    const Matrix after = read_response_csv(after_dir / (objective.name + ".csv"));
    report.entries.push_back(confirmation_compare(before.data, after.data, objective));
  }
  atomic_write_file(out_path, format == ReportFormat::json
                                  ? confirmation_to_json(report)
                                  : confirmation_to_text(report, banner));
}

void cmd_verify_array(const std::string& name, std::ostream& out, bool dump_csv) {
  const OrthogonalArray& array = catalog_lookup(name);
  const auto violations = validate_array(array);
  if (violations.empty()) {
    if (dump_csv)
      out << format_array_csv(array);
    else
      out << array.name << ": pass (" << array.runs << " runs, " << array.columns
          << " columns)\n";
    return;
  }
  for (const auto& v : violations) out << v.where << ": " << v.message << "\n";
  throw Error(Errc::invalid_argument,
              array.name + " failed validation with " + std::to_string(violations.size()) +
                  " violation(s)");
}

}  // namespace robustdoe
