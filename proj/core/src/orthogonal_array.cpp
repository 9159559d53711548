#include "robustdoe/orthogonal_array.hpp"

#include <map>
#include <string>

namespace robustdoe {

int OrthogonalArray::level_at(int run, int column) const {
  if (run < 1 || run > runs)
    throw Error(Errc::index_out_of_range,
                name + " has runs 1.." + std::to_string(runs) + ", got " + std::to_string(run));
  if (column < 1 || column > columns)
    throw Error(Errc::index_out_of_range, name + " has columns 1.." + std::to_string(columns) +
                                              ", got " + std::to_string(column));
  return matrix[static_cast<std::size_t>(run - 1)][static_cast<std::size_t>(column - 1)];
}

std::vector<Violation> validate_array(const OrthogonalArray& a) {
  std::vector<Violation> out;

  if (a.matrix.size() != static_cast<std::size_t>(a.runs) ||
      static_cast<int>(a.levels_per_column.size()) != a.columns) {
    out.push_back({a.name, "matrix shape does not match runs/columns"});
    return out;
  }
  for (const auto& row : a.matrix)
    if (static_cast<int>(row.size()) != a.columns) {
      out.push_back({a.name, "ragged matrix row"});
      return out;
    }

  // balance: each level appears runs / levels times in every column
  for (int j = 0; j < a.columns; ++j) {
    const int nlv = a.levels_per_column[static_cast<std::size_t>(j)];
    if (nlv < 2 || a.runs % nlv != 0) {
      out.push_back({a.name + " column " + std::to_string(j + 1),
                     "level count " + std::to_string(nlv) + " does not divide " +
                         std::to_string(a.runs) + " runs"});
      continue;
    }
    std::map<int, int> counts;
    for (const auto& row : a.matrix) {
      const int lv = row[static_cast<std::size_t>(j)];
      if (lv < 1 || lv > nlv) {
        counts.clear();
        out.push_back({a.name + " column " + std::to_string(j + 1),
                       "entry " + std::to_string(lv) + " outside 1.." + std::to_string(nlv)});
        break;
      }
      ++counts[lv];
    }
    for (int lv = 1; lv <= nlv; ++lv)
      if (counts.count(lv) && counts[lv] != a.runs / nlv)
        out.push_back({a.name + " column " + std::to_string(j + 1),
                       "level " + std::to_string(lv) + " appears " + std::to_string(counts[lv]) +
                           " times, expected " + std::to_string(a.runs / nlv)});
  }

  // pairwise orthogonality: every ordered level pair equally often
  for (int p = 0; p < a.columns; ++p) {
    for (int q = p + 1; q < a.columns; ++q) {
      const int lp = a.levels_per_column[static_cast<std::size_t>(p)];
      const int lq = a.levels_per_column[static_cast<std::size_t>(q)];
      if (a.runs % (lp * lq) != 0) {
        out.push_back({a.name + " columns (" + std::to_string(p + 1) + "," +
                           std::to_string(q + 1) + ")",
                       "run count not divisible by level-pair count"});
        continue;
      }
      const int expected = a.runs / (lp * lq);
      std::map<std::pair<int, int>, int> counts;
      for (const auto& row : a.matrix)
        ++counts[{row[static_cast<std::size_t>(p)], row[static_cast<std::size_t>(q)]}];
      bool bad = false;
      for (int x = 1; x <= lp && !bad; ++x)
        for (int y = 1; y <= lq && !bad; ++y)
          if (counts[{x, y}] != expected) bad = true;
      if (bad)
        out.push_back({a.name + " columns (" + std::to_string(p + 1) + "," +
                           std::to_string(q + 1) + ")",
                       "level pairs are not equally represented"});
    }
  }

  return out;
}

namespace {

std::vector<FactorAssignment> bind_factors(const OrthogonalArray& array,
                                           const std::vector<std::optional<std::string>>& assignment,
                                           const DesignSpec& spec, FactorKind expected_kind,
                                           const std::string& which) {
  if (assignment.size() > static_cast<std::size_t>(array.columns))
    throw Error(Errc::column_overflow, which + " assignment uses " +
                                           std::to_string(assignment.size()) + " columns; " +
                                           array.name + " has " + std::to_string(array.columns));
  std::vector<FactorAssignment> out;
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (!assignment[k]) continue;
    const auto* f = spec.find_factor(*assignment[k]);
    if (!f)
      throw Error(Errc::invalid_argument,
                  which + " assignment references unknown factor '" + *assignment[k] + "'");
    if (f->kind != expected_kind)
      throw Error(Errc::invalid_argument, "factor '" + f->name + "' has the wrong kind for the " +
                                              which + " array");
    const int col_levels = array.levels_per_column[k];
    if (f->level_count() != col_levels)
      throw Error(Errc::level_mismatch,
                  "factor '" + f->name + "' has " + std::to_string(f->level_count()) +
                      " levels but column " + std::to_string(k + 1) + " of " + array.name +
                      " has " + std::to_string(col_levels));
    out.push_back({static_cast<int>(k + 1), *f});
  }
  return out;
}

}  // namespace

CrossedDesign cross(const OrthogonalArray& inner, const OrthogonalArray& outer,
                    const DesignSpec& spec) {
  CrossedDesign design;
  design.inner = inner;
  design.outer = outer;
  design.inner_factors =
      bind_factors(inner, spec.inner_assignment, spec, FactorKind::controllable, "inner");
  design.outer_factors =
      bind_factors(outer, spec.outer_assignment, spec, FactorKind::noise, "outer");
  if (design.inner_factors.empty())
    throw Error(Errc::invalid_argument, "no controllable factor assigned to the inner array");
  if (design.outer_factors.empty())
    throw Error(Errc::invalid_argument, "no noise factor assigned to the outer array");
  return design;
}

std::vector<RunValue> resolve_run(const CrossedDesign& design, int i, int j) {
  if (i < 1 || i > design.inner.runs)
    throw Error(Errc::index_out_of_range, "inner run " + std::to_string(i) + " outside 1.." +
                                              std::to_string(design.inner.runs));
  if (j < 1 || j > design.outer.runs)
    throw Error(Errc::index_out_of_range, "outer run " + std::to_string(j) + " outside 1.." +
                                              std::to_string(design.outer.runs));
  std::vector<RunValue> out;
  for (const auto& [column, factor] : design.inner_factors) {
    const int level = design.inner.level_at(i, column);
    out.push_back({factor.name, factor.kind, level, factor.value_at(level), factor.unit});
  }
  for (const auto& [column, factor] : design.outer_factors) {
    const int level = design.outer.level_at(j, column);
    out.push_back({factor.name, factor.kind, level, factor.value_at(level), factor.unit});
  }
  return out;
}

}  // namespace robustdoe
