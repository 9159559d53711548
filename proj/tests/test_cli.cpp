#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "robustdoe/csv.hpp"
#include "robustdoe/report.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = ROBUSTDOE_CLI_PATH;
const fs::path kData = ROBUSTDOE_DATA_DIR;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "robustdoe_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd =
      env_prefix + kCli + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

void write(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
}

std::string spec_path() { return (kData / "barrier_spec.json").string(); }
std::string params_path() { return (kData / "surrogate_params.json").string(); }
std::string tables_dir() { return (kData / "tables").string(); }

}  // namespace

TEST_CASE("design writes 36 cells and is byte-deterministic") {
  const fs::path out1 = scratch() / "design1.csv";
  const fs::path out2 = scratch() / "design2.csv";
  CHECK(run("design --spec " + spec_path() + " --out " + out1.string()).exit_code == 0);
  CHECK(run("design --spec " + spec_path() + " --out " + out2.string()).exit_code == 0);
  const std::string csv = slurp(out1);
  CHECK(csv == slurp(out2));
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 37);
}

TEST_CASE("a spec naming an unknown array exits with the validation code") {
  const fs::path bad = scratch() / "bad_array.json";
  std::string text = slurp(spec_path());
  const auto pos = text.find("L9(3^4)");
  text.replace(pos, 7, "L99");
  write(bad, text);
  const auto r = run("design --spec " + bad.string() + " --out " + (scratch() / "x.csv").string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("UnknownArray") != std::string::npos);
}

TEST_CASE("an invalid spec prints diagnostics on stderr and exits 2") {
  const fs::path bad = scratch() / "bad_spec.json";
  std::string text = slurp(spec_path());
  const auto pos = text.find("[3.5, 4.0, 4.5]");
  text.replace(pos, std::string("[3.5, 4.0, 4.5]").size(), "[3.5]");
  write(bad, text);
  const auto r = run("design --spec " + bad.string() + " --out " + (scratch() / "x.csv").string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find(">=2 levels") != std::string::npos);
}

TEST_CASE("verify-array validates the catalog") {
  CHECK(run("verify-array 'L9(3^4)'").exit_code == 0);
  CHECK(run("verify-array 'L4(2^3)'").exit_code == 0);
  const auto r = run("verify-array L99");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("UnknownArray") != std::string::npos);
}

TEST_CASE("verify-array renders the array as CSV on request") {
  const auto r = run("verify-array 'L4(2^3)' --csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "c1,c2,c3\n1,1,1\n1,2,2\n2,1,2\n2,2,1\n");
}

TEST_CASE("simulate produces deterministic per-objective response files") {
  const fs::path dir1 = scratch() / "sim1";
  const fs::path dir2 = scratch() / "sim2";
  CHECK(run("simulate --spec " + spec_path() + " --params " + params_path() + " --out " +
            dir1.string())
            .exit_code == 0);
  CHECK(run("simulate --spec " + spec_path() + " --params " + params_path() + " --out " +
            dir2.string())
            .exit_code == 0);
  for (const char* name : {"acceleration.csv", "deflection.csv"}) {
    const std::string a = slurp(dir1 / name);
    CHECK(a == slurp(dir2 / name));
    const auto m = robustdoe::parse_response_csv(a, name);
    CHECK(m.rows == 9);
    CHECK(m.cols == 4);
  }
}

TEST_CASE("simulate rejects nonpositive strain-rate constants") {
  const fs::path bad = scratch() / "bad_params.json";
  std::string text = slurp(params_path());
  const auto pos = text.find("\"strain_rate_C\": 40.0");
  text.replace(pos, std::string("\"strain_rate_C\": 40.0").size(), "\"strain_rate_C\": -1.0");
  write(bad, text);
  const auto r = run("simulate --spec " + spec_path() + " --params " + bad.string() + " --out " +
                     (scratch() / "simbad").string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("snr subcommand writes one mean/snr pair per objective") {
  const fs::path out = scratch() / "snr.csv";
  CHECK(run("snr --spec " + spec_path() + " --responses " + tables_dir() + " --out " +
            out.string())
            .exit_code == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("run_id,acceleration_mean,acceleration_snr,deflection_mean,deflection_snr\n",
                  0) == 0);
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 10);
}

TEST_CASE("gra subcommand emits grades and ranks") {
  const fs::path out = scratch() / "gra.csv";
  CHECK(run("gra --spec " + spec_path() + " --responses " + tables_dir() + " --out " +
            out.string())
            .exit_code == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find(",grd,rank") != std::string::npos);
  CHECK(csv.find("\n9,") != std::string::npos);
}

TEST_CASE("analyze reproduces the study's optimum on the bundled tables") {
  const fs::path out = scratch() / "report.json";
  const auto r = run("analyze --spec " + spec_path() + " --responses " + tables_dir() +
                     " --out " + out.string());
  CHECK(r.exit_code == 0);
  const auto report = robustdoe::report_from_json(slurp(out));
  REQUIRE(report.optimal_combination.size() == 3);
  CHECK(report.optimal_combination[0] == std::pair<std::string, int>{"A", 3});
  CHECK(report.optimal_combination[1] == std::pair<std::string, int>{"B", 3});
  CHECK(report.optimal_combination[2] == std::pair<std::string, int>{"C", 1});
  CHECK(report.grey.rank[8] == 1);
  CHECK(report.rho == 0.5);

  const fs::path text_out = scratch() / "report.txt";
  CHECK(run("analyze --spec " + spec_path() + " --responses " + tables_dir() + " --out " +
            text_out.string() + " --format text --no-banner")
            .exit_code == 0);
  const std::string text = slurp(text_out);
  CHECK(text.find("optimal combination: A3 B3 C1") != std::string::npos);
}

TEST_CASE("rho resolution: environment overrides spec, flag overrides both") {
  const fs::path out = scratch() / "report_rho.json";
  auto r = run("analyze --spec " + spec_path() + " --responses " + tables_dir() + " --out " +
                   out.string(),
               "ROBUST_DOE_RHO=0.3 ");
  CHECK(r.exit_code == 0);
  CHECK(robustdoe::report_from_json(slurp(out)).rho == 0.3);

  r = run("analyze --spec " + spec_path() + " --responses " + tables_dir() + " --out " +
              out.string() + " --rho 0.7",
          "ROBUST_DOE_RHO=0.3 ");
  CHECK(r.exit_code == 0);
  CHECK(robustdoe::report_from_json(slurp(out)).rho == 0.7);

  r = run("analyze --spec " + spec_path() + " --responses " + tables_dir() + " --out " +
              out.string(),
          "ROBUST_DOE_RHO=zzz ");
  CHECK(r.exit_code == 2);
}

TEST_CASE("analyze names the offending file on a shape mismatch") {
  const fs::path dir = scratch() / "short_responses";
  fs::create_directories(dir);
  fs::copy_file(kData / "tables" / "deflection.csv", dir / "deflection.csv",
                fs::copy_options::overwrite_existing);
  // truncate acceleration to 8 rows
  std::string text = slurp(kData / "tables" / "acceleration.csv");
  text.erase(text.rfind("9,"));
  write(dir / "acceleration.csv", text);
  const auto r = run("analyze --spec " + spec_path() + " --responses " + dir.string() +
                     " --out " + (scratch() / "x.json").string());
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("acceleration.csv") != std::string::npos);
  CHECK(r.err.find("9x4") != std::string::npos);
}

TEST_CASE("constant responses exit with the degeneracy code") {
  const fs::path dir = scratch() / "constant_responses";
  fs::create_directories(dir);
  std::string constant = "run_id,r1,r2,r3,r4\n";
  for (int i = 1; i <= 9; ++i)
    constant += std::to_string(i) + ",5,5,5,5\n";
  write(dir / "acceleration.csv", constant);
  fs::copy_file(kData / "tables" / "deflection.csv", dir / "deflection.csv",
                fs::copy_options::overwrite_existing);
  const auto r = run("analyze --spec " + spec_path() + " --responses " + dir.string() +
                     " --out " + (scratch() / "x.json").string());
  CHECK(r.exit_code == 4);
  CHECK(r.err.find("ZeroRange") != std::string::npos);
}

TEST_CASE("confirm reproduces the study's improvement percentages") {
  const fs::path out = scratch() / "confirm.json";
  const auto r = run("confirm --spec " + spec_path() + " --before " +
                     (kData / "tables" / "confirm_before").string() + " --after " +
                     (kData / "tables" / "confirm_after").string() + " --out " + out.string());
  CHECK(r.exit_code == 0);
  const auto report = robustdoe::confirmation_from_json(slurp(out));
  REQUIRE(report.entries.size() == 2);
  const auto& defl = report.entries[1];
  CHECK(defl.objective == "deflection");
  CHECK(std::abs(100.0 * defl.mean_reduction - 49.1) < 0.1);
  CHECK(std::abs(100.0 * defl.std_reduction - 76.7) < 0.1);
  CHECK(defl.verdict.before_pass);
  CHECK(defl.verdict.after_pass);
  const auto& accel = report.entries[0];
  CHECK(std::abs(100.0 * accel.mean_reduction - 55.4) < 0.1);
}

TEST_CASE("identical confirmation inputs give zero changes") {
  const fs::path out = scratch() / "confirm_same.json";
  const auto before = (kData / "tables" / "confirm_before").string();
  const auto r = run("confirm --spec " + spec_path() + " --before " + before + " --after " +
                     before + " --out " + out.string());
  CHECK(r.exit_code == 0);
  for (const auto& e : robustdoe::confirmation_from_json(slurp(out)).entries) {
    CHECK(e.mean_reduction == 0.0);
    CHECK(e.std_reduction == 0.0);
    CHECK(e.snr_improvement == 0.0);
  }
}

TEST_CASE("a 1200 mm deflection fails the after verdict") {
  const fs::path dir = scratch() / "confirm_bad_after";
  fs::create_directories(dir);
  fs::copy_file(kData / "tables" / "confirm_after" / "acceleration.csv",
                dir / "acceleration.csv", fs::copy_options::overwrite_existing);
  write(dir / "deflection.csv", "run_id,r1,r2,r3,r4\n1,356,1200,353,373\n");
  const fs::path out = scratch() / "confirm_bad.json";
  const auto r = run("confirm --spec " + spec_path() + " --before " +
                     (kData / "tables" / "confirm_before").string() + " --after " + dir.string() +
                     " --out " + out.string());
  CHECK(r.exit_code == 0);
  const auto report = robustdoe::confirmation_from_json(slurp(out));
  CHECK(report.entries[1].verdict.before_pass);
  CHECK_FALSE(report.entries[1].verdict.after_pass);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run("frobnicate").exit_code == 64);
  CHECK(run("design").exit_code == 64);          // missing required options
  CHECK(run("analyze --spec x").exit_code == 64);
  CHECK(run("--help").exit_code == 0);
}
