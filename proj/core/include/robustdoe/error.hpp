#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace robustdoe {

// Failure categories. The CLI maps each to a process exit code:
//   validation -> 2, parse/shape/io -> 3, numeric degeneracy -> 4, usage -> 64.
enum class Errc {
  empty_input,
  degenerate_signal,
  division_by_zero,
  zero_range,
  invalid_rho,
  invalid_weights,
  unknown_array,
  level_mismatch,
  column_overflow,
  index_out_of_range,
  unknown_factor,
  invalid_argument,
  shape_mismatch,
  parse_error,
  io_error,
  usage,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::degenerate_signal: return "DegenerateSignal";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::zero_range: return "ZeroRange";
    case Errc::invalid_rho: return "InvalidRho";
    case Errc::invalid_weights: return "InvalidWeights";
    case Errc::unknown_array: return "UnknownArray";
    case Errc::level_mismatch: return "LevelMismatch";
    case Errc::column_overflow: return "ColumnOverflow";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::unknown_factor: return "UnknownFactor";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::usage: return "Usage";
  }
  return "Unknown";
}

constexpr int exit_code_for(Errc c) {
  switch (c) {
    case Errc::degenerate_signal:
    case Errc::division_by_zero:
    case Errc::zero_range:
      return 4;
    case Errc::shape_mismatch:
    case Errc::parse_error:
    case Errc::io_error:
      return 3;
    case Errc::usage:
      return 64;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }
  int exit_code() const { return exit_code_for(code_); }

 private:
  Errc code_;
};

// One diagnostic produced by a validator. Validators collect all problems
// instead of stopping at the first one.
struct Violation {
  std::string where;    // factor/objective/column the problem is attached to
  std::string message;

  bool operator==(const Violation&) const = default;
};

}  // namespace robustdoe
