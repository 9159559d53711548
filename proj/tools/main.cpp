// robustdoe: Taguchi crossed-array parameter design with grey relational
// analysis. Subcommands cover the full pipeline: design -> simulate (or
// measured responses) -> snr -> gra -> analyze -> confirm.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "robustdoe/commands.hpp"
#include "robustdoe/error.hpp"

namespace {

robustdoe::ReportFormat parse_format(const std::string& text) {
  if (text == "json") return robustdoe::ReportFormat::json;
  if (text == "text") return robustdoe::ReportFormat::text;
  throw robustdoe::Error(robustdoe::Errc::usage, "--format must be 'json' or 'text'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust design-of-experiments toolkit: Taguchi crossed arrays, "
               "signal-to-noise ratios, grey relational analysis, range analysis and ANOVA"};
  app.require_subcommand(1);

  std::string spec_path, out_path, params_path, responses_dir, before_dir, after_dir;
  std::string array_name, format_text = "json";
  std::optional<double> rho_flag;
  bool no_banner = false;

  auto* design = app.add_subcommand("design", "Write the crossed-design cell listing as CSV");
  design->add_option("--spec", spec_path, "Design spec JSON file")->required();
  design->add_option("--out", out_path, "Output CSV path")->required();

  auto* simulate =
      app.add_subcommand("simulate", "Produce surrogate responses, one CSV per objective");
  simulate->add_option("--spec", spec_path, "Design spec JSON file")->required();
  simulate->add_option("--params", params_path, "Surrogate parameter JSON file")->required();
  simulate->add_option("--out", responses_dir, "Output directory")->required();

  auto* snr = app.add_subcommand("snr", "Per-run means and signal-to-noise ratios as CSV");
  snr->add_option("--spec", spec_path, "Design spec JSON file")->required();
  snr->add_option("--responses", responses_dir, "Directory with <objective>.csv files")
      ->required();
  snr->add_option("--out", out_path, "Output CSV path")->required();

  auto* gra = app.add_subcommand("gra", "Normalized SNR, grey coefficients and grades as CSV");
  gra->add_option("--spec", spec_path, "Design spec JSON file")->required();
  gra->add_option("--responses", responses_dir, "Directory with <objective>.csv files")
      ->required();
  gra->add_option("--out", out_path, "Output CSV path")->required();
  gra->add_option("--rho", rho_flag, "Distinguishing coefficient in (0,1]");

  auto* analyze = app.add_subcommand("analyze", "Full pipeline report (SNR, GRA, range, ANOVA)");
  analyze->add_option("--spec", spec_path, "Design spec JSON file")->required();
  analyze->add_option("--responses", responses_dir, "Directory with <objective>.csv files")
      ->required();
  analyze->add_option("--out", out_path, "Output report path")->required();
  analyze->add_option("--rho", rho_flag, "Distinguishing coefficient in (0,1]");
  analyze->add_option("--format", format_text, "Report format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--no-banner", no_banner, "Omit the timestamped banner in text reports");

  auto* confirm = app.add_subcommand("confirm", "Before/after confirmation comparison");
  confirm->add_option("--spec", spec_path, "Design spec JSON file")->required();
  confirm->add_option("--before", before_dir, "Directory with baseline <objective>.csv files")
      ->required();
  confirm->add_option("--after", after_dir, "Directory with optimized <objective>.csv files")
      ->required();
  confirm->add_option("--out", out_path, "Output report path")->required();
  confirm->add_option("--format", format_text, "Report format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  confirm->add_flag("--no-banner", no_banner, "Omit the timestamped banner in text reports");

  auto* verify = app.add_subcommand("verify-array", "Validate a catalog orthogonal array");
  verify->add_option("name", array_name, "Array name, e.g. L9(3^4)")->required();
  bool dump_csv = false;
  verify->add_flag("--csv", dump_csv, "Print the array as CSV instead of a pass line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
    app.exit(e);
    return 64;
  }

  try {
    if (design->parsed()) {
      robustdoe::cmd_design(spec_path, out_path);
    } else if (simulate->parsed()) {
      robustdoe::cmd_simulate(spec_path, params_path, responses_dir);
    } else if (snr->parsed()) {
      robustdoe::cmd_snr(spec_path, responses_dir, out_path);
    } else if (gra->parsed()) {
      robustdoe::cmd_gra(spec_path, responses_dir, out_path, rho_flag);
    } else if (analyze->parsed()) {
      robustdoe::cmd_analyze(spec_path, responses_dir, out_path, rho_flag,
                             parse_format(format_text), !no_banner);
    } else if (confirm->parsed()) {
      robustdoe::cmd_confirm(spec_path, before_dir, after_dir, out_path,
                             parse_format(format_text), !no_banner);
    } else if (verify->parsed()) {
      robustdoe::cmd_verify_array(array_name, std::cout, dump_csv);
    }
  } catch (const robustdoe::Error& e) {
    std::cerr << "robustdoe: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "robustdoe: internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
