#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "robustdoe/domain.hpp"
#include "robustdoe/error.hpp"

namespace robustdoe {

// Balanced fractional design matrix. Entries of column j lie in
// 1..levels_per_column[j]; every level appears equally often per column and
// every ordered level pair equally often per column pair (strength 2).
struct OrthogonalArray {
  std::string name;
  int runs = 0;
  int columns = 0;
  std::vector<int> levels_per_column;
  std::vector<std::vector<int>> matrix;  // runs x columns

  int level_at(int run, int column) const;  // 1-based indices

  bool operator==(const OrthogonalArray&) const = default;
};

// Canonical catalog: L4(2^3), L8(2^7), L9(3^4), L12(2^11), L16(2^15),
// L18(2^1*3^7), L27(3^13). Rows stored in lexicographic order.
const OrthogonalArray& catalog_lookup(std::string_view name);  // throws UnknownArray
std::vector<std::string> catalog_names();

// Checks balance and pairwise orthogonality; returns one violation per
// offending column or column pair (empty when the array is orthogonal).
std::vector<Violation> validate_array(const OrthogonalArray& array);

// A factor bound to one array column (1-based).
struct FactorAssignment {
  int column = 0;
  Factor factor;

  bool operator==(const FactorAssignment&) const = default;
};

// Inner (controllable) array crossed with outer (noise) array. Cell (i, j)
// runs inner setting i under noise condition j; there are exactly
// inner.runs * outer.runs cells.
struct CrossedDesign {
  OrthogonalArray inner;
  OrthogonalArray outer;
  std::vector<FactorAssignment> inner_factors;
  std::vector<FactorAssignment> outer_factors;

  int inner_runs() const { return inner.runs; }
  int outer_runs() const { return outer.runs; }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(inner.runs) * static_cast<std::size_t>(outer.runs);
  }
};

// Binds the spec's factors to array columns. Throws ColumnOverflow when more
// factors are assigned than the array has columns, LevelMismatch when a
// factor's level count differs from its column's, InvalidArgument when a
// factor is missing or of the wrong kind.
CrossedDesign cross(const OrthogonalArray& inner, const OrthogonalArray& outer,
                    const DesignSpec& spec);

// One factor's setting in a resolved cell.
struct RunValue {
  std::string factor;
  FactorKind kind = FactorKind::controllable;
  int level = 0;    // 1-based level index
  double value = 0.0;
  std::string unit;
};

// Physical settings of cell (i, j), controllable factors first.
// Indices are 1-based; out-of-range throws IndexOutOfRange.
std::vector<RunValue> resolve_run(const CrossedDesign& design, int i, int j);

}  // namespace robustdoe
