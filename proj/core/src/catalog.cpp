#include <array>
#include <map>
#include <string>
#include <vector>

#include "robustdoe/orthogonal_array.hpp"

namespace robustdoe {
namespace {

// Canonical literal matrices, rows in lexicographic order. The L9 is stored
// with columns (u, v, u+2v, u+v) over GF(3) so that columns 1-3 carry the
// design-variable block used by the bundled case study; column 4 is left for
// the residual (ANOVA error term).

OrthogonalArray make(std::string name, std::vector<int> levels,
                     std::vector<std::vector<int>> rows) {
  OrthogonalArray a;
  a.name = std::move(name);
  a.runs = static_cast<int>(rows.size());
  a.columns = static_cast<int>(levels.size());
  a.levels_per_column = std::move(levels);
  a.matrix = std::move(rows);
  return a;
}

const std::map<std::string, OrthogonalArray>& catalog() {
  static const std::map<std::string, OrthogonalArray> arrays = [] {
    std::map<std::string, OrthogonalArray> m;

    m["L4(2^3)"] = make("L4(2^3)", std::vector<int>(3, 2),
                        {
                            {1, 1, 1},
                            {1, 2, 2},
                            {2, 1, 2},
                            {2, 2, 1},
                        });

    m["L8(2^7)"] = make("L8(2^7)", std::vector<int>(7, 2),
                        {
                            {1, 1, 1, 1, 1, 1, 1},
                            {1, 1, 1, 2, 2, 2, 2},
                            {1, 2, 2, 1, 1, 2, 2},
                            {1, 2, 2, 2, 2, 1, 1},
                            {2, 1, 2, 1, 2, 1, 2},
                            {2, 1, 2, 2, 1, 2, 1},
                            {2, 2, 1, 1, 2, 2, 1},
                            {2, 2, 1, 2, 1, 1, 2},
                        });

    m["L9(3^4)"] = make("L9(3^4)", std::vector<int>(4, 3),
                        {
                            {1, 1, 1, 1},
                            {1, 2, 3, 2},
                            {1, 3, 2, 3},
                            {2, 1, 2, 2},
                            {2, 2, 1, 3},
                            {2, 3, 3, 1},
                            {3, 1, 3, 3},
                            {3, 2, 2, 1},
                            {3, 3, 1, 2},
                        });

    m["L12(2^11)"] = make("L12(2^11)", std::vector<int>(11, 2),
                          {
                              {1, 1, 1, 2, 2, 2, 1, 2, 1, 1, 2},
                              {1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2},
                              {1, 1, 2, 2, 2, 1, 2, 1, 1, 2, 1},
                              {1, 2, 1, 1, 1, 2, 2, 2, 1, 2, 1},
                              {1, 2, 1, 1, 2, 1, 1, 1, 2, 2, 2},
                              {1, 2, 2, 2, 1, 2, 1, 1, 2, 1, 1},
                              {2, 1, 1, 1, 2, 2, 2, 1, 2, 1, 1},
                              {2, 1, 1, 2, 1, 1, 1, 2, 2, 2, 1},
                              {2, 1, 2, 1, 1, 2, 1, 1, 1, 2, 2},
                              {2, 2, 1, 2, 1, 1, 2, 1, 1, 1, 2},
                              {2, 2, 2, 1, 2, 1, 1, 2, 1, 1, 1},
                              {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
                          });

    m["L16(2^15)"] = make("L16(2^15)", std::vector<int>(15, 2),
                          {
                              {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                              {1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2},
                              {1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1, 2, 2, 2, 2},
                              {1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1},
                              {1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2},
                              {1, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 1, 1},
                              {1, 2, 2, 2, 2, 1, 1, 1, 1, 2, 2, 2, 2, 1, 1},
                              {1, 2, 2, 2, 2, 1, 1, 2, 2, 1, 1, 1, 1, 2, 2},
                              {2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2},
                              {2, 1, 2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2, 1},
                              {2, 1, 2, 2, 1, 2, 1, 1, 2, 1, 2, 2, 1, 2, 1},
                              {2, 1, 2, 2, 1, 2, 1, 2, 1, 2, 1, 1, 2, 1, 2},
                              {2, 2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2, 1},
                              {2, 2, 1, 1, 2, 2, 1, 2, 1, 1, 2, 2, 1, 1, 2},
                              {2, 2, 1, 2, 1, 1, 2, 1, 2, 2, 1, 2, 1, 1, 2},
                              {2, 2, 1, 2, 1, 1, 2, 2, 1, 1, 2, 1, 2, 2, 1},
                          });

    {
      std::vector<int> levels(8, 3);
      levels[0] = 2;
      m["L18(2^1*3^7)"] = make("L18(2^1*3^7)", std::move(levels),
                               {
                                   {1, 1, 1, 1, 1, 1, 1, 1},
                                   {1, 1, 2, 2, 2, 2, 2, 2},
                                   {1, 1, 3, 3, 3, 3, 3, 3},
                                   {1, 2, 1, 1, 2, 2, 3, 3},
                                   {1, 2, 2, 2, 3, 3, 1, 1},
                                   {1, 2, 3, 3, 1, 1, 2, 2},
                                   {1, 3, 1, 2, 1, 3, 2, 3},
                                   {1, 3, 2, 3, 2, 1, 3, 1},
                                   {1, 3, 3, 1, 3, 2, 1, 2},
                                   {2, 1, 1, 3, 3, 2, 2, 1},
                                   {2, 1, 2, 1, 1, 3, 3, 2},
                                   {2, 1, 3, 2, 2, 1, 1, 3},
                                   {2, 2, 1, 2, 3, 1, 3, 2},
                                   {2, 2, 2, 3, 1, 2, 1, 3},
                                   {2, 2, 3, 1, 2, 3, 2, 1},
                                   {2, 3, 1, 3, 2, 3, 1, 2},
                                   {2, 3, 2, 1, 3, 1, 2, 3},
                                   {2, 3, 3, 2, 1, 2, 3, 1},
                               });
    }

    m["L27(3^13)"] = make("L27(3^13)", std::vector<int>(13, 3),
                          {
                              {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                              {1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3},
                              {1, 1, 1, 1, 3, 3, 3, 3, 3, 2, 2, 2, 2},
                              {1, 2, 2, 3, 1, 1, 2, 2, 3, 1, 2, 2, 3},
                              {1, 2, 2, 3, 2, 2, 3, 3, 1, 3, 1, 1, 2},
                              {1, 2, 2, 3, 3, 3, 1, 1, 2, 2, 3, 3, 1},
                              {1, 3, 3, 2, 1, 1, 3, 3, 2, 1, 3, 3, 2},
                              {1, 3, 3, 2, 2, 2, 1, 1, 3, 3, 2, 2, 1},
                              {1, 3, 3, 2, 3, 3, 2, 2, 1, 2, 1, 1, 3},
                              {2, 1, 2, 2, 1, 2, 1, 2, 2, 2, 1, 2, 2},
                              {2, 1, 2, 2, 2, 3, 2, 3, 3, 1, 3, 1, 1},
                              {2, 1, 2, 2, 3, 1, 3, 1, 1, 3, 2, 3, 3},
                              {2, 2, 3, 1, 1, 2, 2, 3, 1, 2, 2, 3, 1},
                              {2, 2, 3, 1, 2, 3, 3, 1, 2, 1, 1, 2, 3},
                              {2, 2, 3, 1, 3, 1, 1, 2, 3, 3, 3, 1, 2},
                              {2, 3, 1, 3, 1, 2, 3, 1, 3, 2, 3, 1, 3},
                              {2, 3, 1, 3, 2, 3, 1, 2, 1, 1, 2, 3, 2},
                              {2, 3, 1, 3, 3, 1, 2, 3, 2, 3, 1, 2, 1},
                              {3, 1, 3, 3, 1, 3, 1, 3, 3, 3, 1, 3, 3},
                              {3, 1, 3, 3, 2, 1, 2, 1, 1, 2, 3, 2, 2},
                              {3, 1, 3, 3, 3, 2, 3, 2, 2, 1, 2, 1, 1},
                              {3, 2, 1, 2, 1, 3, 2, 1, 2, 3, 2, 1, 2},
                              {3, 2, 1, 2, 2, 1, 3, 2, 3, 2, 1, 3, 1},
                              {3, 2, 1, 2, 3, 2, 1, 3, 1, 1, 3, 2, 3},
                              {3, 3, 2, 1, 1, 3, 3, 2, 1, 3, 3, 2, 1},
                              {3, 3, 2, 1, 2, 1, 1, 3, 2, 2, 2, 1, 3},
                              {3, 3, 2, 1, 3, 2, 2, 1, 3, 1, 1, 3, 2},
                          });

    return m;
  }();
  return arrays;
}

// Accept a few spellings seen in the wild: "L18(2^1·3^7)" and "L18(2^1 3^7)"
// map to the canonical "L18(2^1*3^7)".
std::string canonical_name(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size();) {
    // UTF-8 middle dot U+00B7
    if (i + 1 < name.size() && static_cast<unsigned char>(name[i]) == 0xC2 &&
        static_cast<unsigned char>(name[i + 1]) == 0xB7) {
      out.push_back('*');
      i += 2;
    } else if (name[i] == ' ') {
      ++i;
    } else {
      out.push_back(name[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace

const OrthogonalArray& catalog_lookup(std::string_view name) {
  const auto& m = catalog();
  auto it = m.find(canonical_name(name));
  if (it == m.end())
    throw Error(Errc::unknown_array, "no catalog array named '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : catalog()) out.push_back(name);
  return out;
}

}  // namespace robustdoe
