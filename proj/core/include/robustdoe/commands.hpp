#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "robustdoe/domain.hpp"

namespace robustdoe {

// Implementations of the CLI subcommands, usable directly from tests.
// Each throws robustdoe::Error on failure; the CLI maps Error::exit_code().

enum class ReportFormat { json, text };

// rho resolution order: explicit flag, ROBUST_DOE_RHO environment variable,
// spec file value, built-in 0.5.
double resolve_rho(const DesignSpec& spec, std::optional<double> flag);

// Crossed-design cell listing (36 rows for an L9 x L4 spec).
void cmd_design(const std::filesystem::path& spec_path, const std::filesystem::path& out_path);

// Surrogate simulation: one response CSV per objective, deterministic bytes.
void cmd_simulate(const std::filesystem::path& spec_path,
                  const std::filesystem::path& params_path,
                  const std::filesystem::path& out_dir);

// SNR table (per-run mean and SNR per objective) as CSV.
void cmd_snr(const std::filesystem::path& spec_path,
             const std::filesystem::path& responses_dir,
             const std::filesystem::path& out_path);

// Normalized series, GRC, GRD and rank as CSV.
void cmd_gra(const std::filesystem::path& spec_path,
             const std::filesystem::path& responses_dir,
             const std::filesystem::path& out_path, std::optional<double> rho_flag);

// Full pipeline report (JSON or aligned text).
void cmd_analyze(const std::filesystem::path& spec_path,
                 const std::filesystem::path& responses_dir,
                 const std::filesystem::path& out_path, std::optional<double> rho_flag,
                 ReportFormat format, bool banner);

// Before/after confirmation comparison. `before_dir` and `after_dir` hold one
// response CSV per objective (single-row: one confirmation run over the noise
// columns).
void cmd_confirm(const std::filesystem::path& spec_path,
                 const std::filesystem::path& before_dir,
                 const std::filesystem::path& after_dir,
                 const std::filesystem::path& out_path, ReportFormat format, bool banner);

// Validates a catalog array; writes the violation listing (if any) to `out`,
// or the array itself as CSV when `dump_csv` is set. Throws UnknownArray for
// names outside the catalog, Error(validation) when violations are found.
void cmd_verify_array(const std::string& name, std::ostream& out, bool dump_csv = false);

}  // namespace robustdoe
