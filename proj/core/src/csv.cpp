#include "robustdoe/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace robustdoe {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_response_csv(const Matrix& values) {
  std::string out = "run_id";
  for (std::size_t j = 0; j < values.cols; ++j) out += ",r" + std::to_string(j + 1);
  out += "\n";
  for (std::size_t i = 0; i < values.rows; ++i) {
    out += std::to_string(i + 1);
    for (std::size_t j = 0; j < values.cols; ++j) {
      out += ",";
      out += format_double(values.at(i, j));
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      break;
    }
    cells.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col,
                  std::string_view origin) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(value))
    throw Error(Errc::parse_error, std::string(origin) + ": cell (" + std::to_string(row) + "," +
                                       std::to_string(col) + ") is not a finite real: '" + cell +
                                       "'");
  return value;
}

}  // namespace

Matrix parse_response_csv(std::string_view text, std::string_view origin) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t pos = text.find('\n', start);
    if (pos == std::string_view::npos) pos = text.size();
    std::string_view line = text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = pos + 1;
  }
  if (lines.empty()) throw Error(Errc::parse_error, std::string(origin) + ": empty file");

  const auto header = split_line(lines[0]);
  if (header.empty() || header[0] != "run_id")
    throw Error(Errc::parse_error, std::string(origin) + ": header must start with 'run_id'");
  const std::size_t cols = header.size() - 1;
  if (cols == 0)
    throw Error(Errc::parse_error, std::string(origin) + ": at least one response column required");
  for (std::size_t j = 1; j < header.size(); ++j)
    if (header[j] != "r" + std::to_string(j))
      throw Error(Errc::parse_error, std::string(origin) + ": expected header column 'r" +
                                         std::to_string(j) + "', got '" + header[j] + "'");

  Matrix out(lines.size() - 1, cols);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_line(lines[i]);
    if (cells.size() != cols + 1)
      throw Error(Errc::shape_mismatch, std::string(origin) + ": row " + std::to_string(i) +
                                            " has " + std::to_string(cells.size()) +
                                            " cells, expected " + std::to_string(cols + 1));
    if (cells[0] != std::to_string(i))
      throw Error(Errc::parse_error, std::string(origin) + ": run_id of row " + std::to_string(i) +
                                         " must be " + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j)
      out.at(i - 1, j) = parse_cell(cells[j + 1], i, j + 1, origin);
  }
  if (out.rows == 0)
    throw Error(Errc::shape_mismatch, std::string(origin) + ": no data rows");
  return out;
}

Matrix read_response_csv(const std::filesystem::path& path) {
  return parse_response_csv(read_file(path), path.string());
}

std::string format_design_csv(const CrossedDesign& design) {
  std::string out = "run_id,inner_run,outer_run";
  for (const auto& a : design.inner_factors)
    out += "," + a.factor.name + "_level," + a.factor.name;
  for (const auto& a : design.outer_factors)
    out += "," + a.factor.name + "_level," + a.factor.name;
  out += "\n";

  std::size_t run_id = 1;
  for (int i = 1; i <= design.inner.runs; ++i) {
    for (int j = 1; j <= design.outer.runs; ++j, ++run_id) {
      out += std::to_string(run_id) + "," + std::to_string(i) + "," + std::to_string(j);
      for (const auto& rv : resolve_run(design, i, j))
        out += "," + std::to_string(rv.level) + "," + format_double(rv.value);
      out += "\n";
    }
  }
  return out;
}

std::string format_array_csv(const OrthogonalArray& array) {
  std::string out;
  for (int j = 1; j <= array.columns; ++j) {
    if (j > 1) out += ",";
    out += "c" + std::to_string(j);
  }
  out += "\n";
  for (const auto& row : array.matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(row[j]);
    }
    out += "\n";
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::io_error, "failed reading '" + path.string() + "'");
  return std::move(ss).str();
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(Errc::io_error, "failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(Errc::io_error, "cannot move '" + tmp.string() + "' to '" + path.string() + "'");
  }
}

}  // namespace robustdoe
