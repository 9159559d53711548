#include "robustdoe/domain.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "robustdoe/orthogonal_array.hpp"

namespace robustdoe {

double Factor::value_at(int level) const {
  if (level < 1 || level > level_count())
    throw Error(Errc::index_out_of_range,
                "factor '" + name + "' has no level " + std::to_string(level));
  return levels[static_cast<std::size_t>(level - 1)];
}

std::string_view comparator_text(Comparator c) {
  switch (c) {
    case Comparator::le: return "<=";
    case Comparator::lt: return "<";
    case Comparator::ge: return ">=";
    case Comparator::gt: return ">";
  }
  return "?";
}

std::optional<Comparator> parse_comparator(std::string_view text) {
  if (text == "<=") return Comparator::le;
  if (text == "<") return Comparator::lt;
  if (text == ">=") return Comparator::ge;
  if (text == ">") return Comparator::gt;
  return std::nullopt;
}

bool Threshold::satisfied(double x) const {
  switch (comparator) {
    case Comparator::le: return x <= value;
    case Comparator::lt: return x < value;
    case Comparator::ge: return x >= value;
    case Comparator::gt: return x > value;
  }
  return false;
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw Error(Errc::empty_input, "summarize requires a non-empty sample");
  for (double v : values)
    if (!std::isfinite(v)) throw Error(Errc::invalid_argument, "summarize requires finite values");

  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;

  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);

  SummaryStats out;
  out.mean = mean;
  out.std_population = std::sqrt(ss / n);
  out.count = values.size();
  return out;
}

std::vector<Factor> DesignSpec::controllable_factors() const {
  std::vector<Factor> out;
  for (const auto& f : factors)
    if (f.kind == FactorKind::controllable) out.push_back(f);
  return out;
}

std::vector<Factor> DesignSpec::noise_factors() const {
  std::vector<Factor> out;
  for (const auto& f : factors)
    if (f.kind == FactorKind::noise) out.push_back(f);
  return out;
}

const Factor* DesignSpec::find_factor(std::string_view name) const {
  for (const auto& f : factors)
    if (f.name == name) return &f;
  return nullptr;
}

const QualityCharacteristic* DesignSpec::find_objective(std::string_view name) const {
  for (const auto& o : objectives)
    if (o.name == name) return &o;
  return nullptr;
}

namespace {

void check_factor(const Factor& f, std::vector<Violation>& out) {
  const std::string where = "factor '" + f.name + "'";
  if (f.name.empty()) out.push_back({"factor", "factor name must be non-empty"});
  if (f.levels.size() < 2) out.push_back({where, ">=2 levels required"});
  if (f.unit.empty()) out.push_back({where, "unit string must be non-empty"});
  for (double v : f.levels)
    if (!std::isfinite(v)) {
      out.push_back({where, "level values must be finite"});
      break;
    }
  std::set<double> uniq(f.levels.begin(), f.levels.end());
  if (uniq.size() != f.levels.size())
    out.push_back({where, "level values must be pairwise distinct"});
}

void check_assignment(const DesignSpec& spec,
                      const std::vector<std::optional<std::string>>& assignment,
                      FactorKind expected_kind, const std::string& which,
                      const OrthogonalArray* array, std::vector<Violation>& out) {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (!assignment[k]) continue;
    const std::string& name = *assignment[k];
    const std::string where = which + " assignment column " + std::to_string(k + 1);
    const Factor* f = spec.find_factor(name);
    if (!f) {
      out.push_back({where, "unknown factor '" + name + "'"});
      continue;
    }
    if (f->kind != expected_kind)
      out.push_back({where, "factor '" + name + "' has the wrong kind for the " + which + " array"});
    if (!seen.insert(name).second)
      out.push_back({where, "factor '" + name + "' assigned more than once"});
    if (array && k < array->levels_per_column.size() &&
        f->level_count() != array->levels_per_column[k])
      out.push_back({where, "factor '" + name + "' has " + std::to_string(f->level_count()) +
                                " levels but column " + std::to_string(k + 1) + " of " +
                                array->name + " has " +
                                std::to_string(array->levels_per_column[k])});
  }
  if (array && assignment.size() > static_cast<std::size_t>(array->columns))
    out.push_back({which + " assignment", "assigns " + std::to_string(assignment.size()) +
                                              " columns but " + array->name + " has only " +
                                              std::to_string(array->columns)});
  // every factor of this kind must be placed somewhere
  for (const auto& f : spec.factors) {
    if (f.kind != expected_kind) continue;
    bool assigned = false;
    for (const auto& a : assignment)
      if (a && *a == f.name) assigned = true;
    if (!assigned)
      out.push_back({which + " assignment", "factor '" + f.name + "' is not assigned to a column"});
  }
}

}  // namespace

std::vector<Violation> validate_design_spec(const DesignSpec& spec, const OrthogonalArray* inner,
                                            const OrthogonalArray* outer) {
  std::vector<Violation> out;

  if (spec.factors.empty()) out.push_back({"factors", "at least one factor is required"});
  if (spec.controllable_factors().empty())
    out.push_back({"factors", "at least one controllable factor is required"});
  if (spec.noise_factors().empty())
    out.push_back({"factors", "at least one noise factor is required"});

  std::set<std::string> names;
  for (const auto& f : spec.factors) {
    check_factor(f, out);
    if (!names.insert(f.name).second)
      out.push_back({"factor '" + f.name + "'", "duplicate factor name"});
  }

  if (spec.objectives.empty()) out.push_back({"objectives", "at least one objective is required"});
  std::set<std::string> onames;
  for (const auto& o : spec.objectives) {
    const std::string where = "objective '" + o.name + "'";
    if (o.name.empty()) out.push_back({"objective", "objective name must be non-empty"});
    if (!onames.insert(o.name).second) out.push_back({where, "duplicate objective name"});
    if (o.kind == ObjectiveKind::nominal_best && !o.target)
      out.push_back({where, "missing target (required for nominal-best)"});
    if (o.kind != ObjectiveKind::nominal_best && o.target)
      out.push_back({where, "target is only allowed for nominal-best"});
    if (o.threshold && !std::isfinite(o.threshold->value))
      out.push_back({where, "threshold value must be finite"});
  }

  check_assignment(spec, spec.inner_assignment, FactorKind::controllable, "inner", inner, out);
  check_assignment(spec, spec.outer_assignment, FactorKind::noise, "outer", outer, out);

  if (spec.gra.rho && !(*spec.gra.rho > 0.0 && *spec.gra.rho <= 1.0))
    out.push_back({"gra.rho", "rho must lie in (0, 1]"});
  if (spec.gra.weights) {
    const auto& w = *spec.gra.weights;
    if (w.size() != spec.objectives.size())
      out.push_back({"gra.weights", "one weight per objective is required"});
    double sum = 0.0;
    bool neg = false;
    for (double x : w) {
      sum += x;
      if (x < 0.0) neg = true;
    }
    if (neg) out.push_back({"gra.weights", "weights must be nonnegative"});
    if (!w.empty() && std::abs(sum - 1.0) > 1e-9)
      out.push_back({"gra.weights", "weights must sum to 1"});
  }

  if (spec.analysis.kind == ResponseSourceSpec::Kind::snr &&
      !spec.find_objective(spec.analysis.objective))
    out.push_back({"analysis.response",
                   "unknown objective '" + spec.analysis.objective + "' for snr source"});

  return out;
}

}  // namespace robustdoe
