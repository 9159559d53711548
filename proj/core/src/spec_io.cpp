#include "robustdoe/spec_io.hpp"

#include <set>
#include <string>

#include <json.hpp>

#include "robustdoe/csv.hpp"

namespace robustdoe {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view origin, const std::string& message) {
  throw Error(Errc::parse_error, std::string(origin) + ": " + message);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         std::string_view origin, const std::string& context) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) fail(origin, context + ": unknown key '" + key + "'");
}

double require_number(const json& obj, const std::string& key, std::string_view origin,
                      const std::string& context) {
  if (!obj.contains(key)) fail(origin, context + ": missing '" + key + "'");
  if (!obj[key].is_number()) fail(origin, context + ": '" + key + "' must be a number");
  return obj[key].get<double>();
}

std::string require_string(const json& obj, const std::string& key, std::string_view origin,
                           const std::string& context) {
  if (!obj.contains(key)) fail(origin, context + ": missing '" + key + "'");
  if (!obj[key].is_string()) fail(origin, context + ": '" + key + "' must be a string");
  return obj[key].get<std::string>();
}

Factor parse_factor(const json& j, std::string_view origin) {
  if (!j.is_object()) fail(origin, "each factor must be an object");
  reject_unknown_keys(j, {"name", "kind", "unit", "levels", "notes"}, origin, "factor");
  Factor f;
  f.name = require_string(j, "name", origin, "factor");
  const std::string kind = require_string(j, "kind", origin, "factor '" + f.name + "'");
  if (kind == "controllable")
    f.kind = FactorKind::controllable;
  else if (kind == "noise")
    f.kind = FactorKind::noise;
  else
    fail(origin, "factor '" + f.name + "': kind must be 'controllable' or 'noise'");
  f.unit = require_string(j, "unit", origin, "factor '" + f.name + "'");
  if (!j.contains("levels") || !j["levels"].is_array())
    fail(origin, "factor '" + f.name + "': 'levels' must be an array of numbers");
  for (const auto& v : j["levels"]) {
    if (!v.is_number()) fail(origin, "factor '" + f.name + "': levels must be numbers");
    f.levels.push_back(v.get<double>());
  }
  return f;
}

QualityCharacteristic parse_objective(const json& j, std::string_view origin) {
  if (!j.is_object()) fail(origin, "each objective must be an object");
  reject_unknown_keys(j, {"name", "kind", "target", "threshold", "notes"}, origin, "objective");
  QualityCharacteristic o;
  o.name = require_string(j, "name", origin, "objective");
  const std::string kind = require_string(j, "kind", origin, "objective '" + o.name + "'");
  if (kind == "smaller-better")
    o.kind = ObjectiveKind::smaller_better;
  else if (kind == "larger-better")
    o.kind = ObjectiveKind::larger_better;
  else if (kind == "nominal-best")
    o.kind = ObjectiveKind::nominal_best;
  else
    fail(origin, "objective '" + o.name +
                     "': kind must be 'smaller-better', 'larger-better' or 'nominal-best'");
  if (j.contains("target")) {
    if (!j["target"].is_number())
      fail(origin, "objective '" + o.name + "': 'target' must be a number");
    o.target = j["target"].get<double>();
  }
  if (j.contains("threshold")) {
    const json& t = j["threshold"];
    if (!t.is_object()) fail(origin, "objective '" + o.name + "': 'threshold' must be an object");
    reject_unknown_keys(t, {"comparator", "value", "unit"}, origin,
                        "objective '" + o.name + "' threshold");
    Threshold th;
    const std::string cmp = require_string(t, "comparator", origin, "threshold");
    const auto parsed = parse_comparator(cmp);
    if (!parsed)
      fail(origin, "objective '" + o.name + "': threshold comparator must be <=, <, >= or >");
    th.comparator = *parsed;
    th.value = require_number(t, "value", origin, "threshold");
    th.unit = require_string(t, "unit", origin, "threshold");
    o.threshold = th;
  }
  return o;
}

std::vector<std::optional<std::string>> parse_assignment(const json& j, std::string_view origin,
                                                         const std::string& context) {
  if (!j.is_array()) fail(origin, context + " must be an array of factor names (or null)");
  std::vector<std::optional<std::string>> out;
  for (const auto& v : j) {
    if (v.is_null())
      out.push_back(std::nullopt);
    else if (v.is_string())
      out.push_back(v.get<std::string>());
    else
      fail(origin, context + " entries must be strings or null");
  }
  return out;
}

}  // namespace

DesignSpec parse_design_spec(std::string_view json_text, std::string_view origin) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded()) fail(origin, "invalid JSON");
  if (!root.is_object()) fail(origin, "top level must be an object");
  reject_unknown_keys(root, {"factors", "objectives", "arrays", "gra", "analysis", "notes"},
                      origin, "spec");

  DesignSpec spec;
  if (!root.contains("factors") || !root["factors"].is_array())
    fail(origin, "'factors' must be an array");
  for (const auto& f : root["factors"]) spec.factors.push_back(parse_factor(f, origin));

  if (!root.contains("objectives") || !root["objectives"].is_array())
    fail(origin, "'objectives' must be an array");
  for (const auto& o : root["objectives"]) spec.objectives.push_back(parse_objective(o, origin));

  if (!root.contains("arrays") || !root["arrays"].is_object())
    fail(origin, "'arrays' must be an object");
  const json& arrays = root["arrays"];
  reject_unknown_keys(arrays, {"inner", "outer", "inner_assignment", "outer_assignment"}, origin,
                      "arrays");
  spec.inner_array = require_string(arrays, "inner", origin, "arrays");
  spec.outer_array = require_string(arrays, "outer", origin, "arrays");
  if (!arrays.contains("inner_assignment"))
    fail(origin, "arrays: missing 'inner_assignment'");
  if (!arrays.contains("outer_assignment"))
    fail(origin, "arrays: missing 'outer_assignment'");
  spec.inner_assignment =
      parse_assignment(arrays["inner_assignment"], origin, "arrays.inner_assignment");
  spec.outer_assignment =
      parse_assignment(arrays["outer_assignment"], origin, "arrays.outer_assignment");

  if (root.contains("gra")) {
    const json& gra = root["gra"];
    if (!gra.is_object()) fail(origin, "'gra' must be an object");
    reject_unknown_keys(gra, {"rho", "weights"}, origin, "gra");
    if (gra.contains("rho")) {
      if (!gra["rho"].is_number()) fail(origin, "gra.rho must be a number");
      spec.gra.rho = gra["rho"].get<double>();
    }
    if (gra.contains("weights")) {
      if (!gra["weights"].is_array()) fail(origin, "gra.weights must be an array");
      std::vector<double> w;
      for (const auto& v : gra["weights"]) {
        if (!v.is_number()) fail(origin, "gra.weights entries must be numbers");
        w.push_back(v.get<double>());
      }
      spec.gra.weights = std::move(w);
    }
  }

  if (root.contains("analysis")) {
    const json& analysis = root["analysis"];
    if (!analysis.is_object()) fail(origin, "'analysis' must be an object");
    reject_unknown_keys(analysis, {"response"}, origin, "analysis");
    const std::string response = require_string(analysis, "response", origin, "analysis");
    if (response == "grd") {
      spec.analysis.kind = ResponseSourceSpec::Kind::grd;
    } else if (response.rfind("snr:", 0) == 0) {
      spec.analysis.kind = ResponseSourceSpec::Kind::snr;
      spec.analysis.objective = response.substr(4);
    } else {
      fail(origin, "analysis.response must be 'grd' or 'snr:<objective>'");
    }
  }

  if (root.contains("notes")) {
    if (!root["notes"].is_string()) fail(origin, "'notes' must be a string");
    spec.notes = root["notes"].get<std::string>();
  }

  return spec;
}

DesignSpec load_design_spec(const std::filesystem::path& path) {
  return parse_design_spec(read_file(path), path.string());
}

SimulationConfig parse_simulation_config(std::string_view json_text, std::string_view origin) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded()) fail(origin, "invalid JSON");
  if (!root.is_object()) fail(origin, "top level must be an object");
  reject_unknown_keys(root, {"model", "factors", "objectives", "notes"}, origin, "params");

  SimulationConfig cfg;
  if (!root.contains("model") || !root["model"].is_object())
    fail(origin, "'model' must be an object");
  const json& model = root["model"];
  reject_unknown_keys(model,
                      {"strain_rate_C", "strain_rate_P", "reference_strain_rate",
                       "impact_angle_deg", "post_section_weight", "beam_section_weight",
                       "deflection_scale"},
                      origin, "model");
  cfg.params.strain_rate_c = require_number(model, "strain_rate_C", origin, "model");
  cfg.params.strain_rate_p = require_number(model, "strain_rate_P", origin, "model");
  cfg.params.reference_strain_rate =
      require_number(model, "reference_strain_rate", origin, "model");
  cfg.params.impact_angle_deg = require_number(model, "impact_angle_deg", origin, "model");
  cfg.params.post_section_weight = require_number(model, "post_section_weight", origin, "model");
  cfg.params.beam_section_weight = require_number(model, "beam_section_weight", origin, "model");
  cfg.params.deflection_scale = require_number(model, "deflection_scale", origin, "model");

  if (!root.contains("factors") || !root["factors"].is_object())
    fail(origin, "'factors' must map surrogate roles to factor names");
  const std::set<std::string> roles = {"post_thickness", "beam_thickness", "post_spacing",
                                       "velocity", "mass", "yield_stress"};
  reject_unknown_keys(root["factors"], roles, origin, "factors");
  for (const auto& role : roles) {
    if (!root["factors"].contains(role)) fail(origin, "factors: missing role '" + role + "'");
    if (!root["factors"][role].is_string())
      fail(origin, "factors." + role + " must be a factor name");
    cfg.factor_roles[role] = root["factors"][role].get<std::string>();
  }

  if (root.contains("objectives")) {
    const json& obj = root["objectives"];
    if (!obj.is_object()) fail(origin, "'objectives' must be an object");
    reject_unknown_keys(obj, {"acceleration", "deflection"}, origin, "objectives");
    if (obj.contains("acceleration"))
      cfg.acceleration_objective = require_string(obj, "acceleration", origin, "objectives");
    if (obj.contains("deflection"))
      cfg.deflection_objective = require_string(obj, "deflection", origin, "objectives");
  }

  if (root.contains("notes")) {
    if (!root["notes"].is_string()) fail(origin, "'notes' must be a string");
    cfg.notes = root["notes"].get<std::string>();
  }

  return cfg;
}

SimulationConfig load_simulation_config(const std::filesystem::path& path) {
  return parse_simulation_config(read_file(path), path.string());
}

}  // namespace robustdoe
