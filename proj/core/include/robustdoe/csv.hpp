#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "robustdoe/matrix.hpp"
#include "robustdoe/orthogonal_array.hpp"

namespace robustdoe {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

// Response CSV: header "run_id,r1,...,rn", one data row per inner run.
// UTF-8, '.' decimal separator, one file per objective.
std::string format_response_csv(const Matrix& values);
Matrix parse_response_csv(std::string_view text, std::string_view origin);
Matrix read_response_csv(const std::filesystem::path& path);

// Crossed-design cell listing: run_id, inner_run, outer_run, then per factor
// its 1-based level index ("<name>_level") and physical value ("<name>").
std::string format_design_csv(const CrossedDesign& design);

// Array rendering: runs x columns of integer levels, header c1..ck.
std::string format_array_csv(const OrthogonalArray& array);

// Whole-file atomic write (temp file + rename). Throws IoError.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

// Reads a whole file; throws IoError when missing/unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace robustdoe
