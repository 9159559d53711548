#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "robustdoe/effects.hpp"
#include "robustdoe/gra.hpp"
#include "robustdoe/snr.hpp"

using namespace robustdoe;

namespace {

std::vector<double> random_responses(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> value(1.0, 100.0);
  std::vector<double> xs(n);
  for (auto& x : xs) x = value(rng);
  return xs;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> value(-60.0, -10.0);
  Matrix m(rows, cols);
  for (auto& v : m.data) v = value(rng);
  return m;
}

std::vector<FactorAssignment> three_factors() {
  return {
      {1, Factor{"A", FactorKind::controllable, "mm", {1, 2, 3}}},
      {2, Factor{"B", FactorKind::controllable, "mm", {1, 2, 3}}},
      {3, Factor{"C", FactorKind::controllable, "mm", {1, 2, 3}}},
  };
}

}  // namespace

static void BM_SnrSmallerBetter(benchmark::State& state) {
  const auto xs = random_responses(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(snr_smaller_better(xs));
}
BENCHMARK(BM_SnrSmallerBetter)->Arg(4)->Arg(64)->Arg(1024);

static void BM_NormalizeAndGrc(benchmark::State& state) {
  const Matrix snr = random_matrix(static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) {
    const auto normalized = normalize_snr(snr);
    benchmark::DoNotOptimize(grey_relational_coefficients(normalized, 0.5));
  }
}
BENCHMARK(BM_NormalizeAndGrc)->Arg(9)->Arg(81)->Arg(729);

static void BM_GreyGrade(benchmark::State& state) {
  const Matrix snr = random_matrix(static_cast<std::size_t>(state.range(0)), 4, 3);
  const auto normalized = normalize_snr(snr);
  const Matrix grc = grey_relational_coefficients(normalized, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(grey_relational_grade(grc));
}
BENCHMARK(BM_GreyGrade)->Arg(9)->Arg(81)->Arg(729);

static void BM_AnovaL9(benchmark::State& state) {
  const auto& l9 = catalog_lookup("L9(3^4)");
  const auto assignment = three_factors();
  const auto response = random_responses(9, 4);
  for (auto _ : state) benchmark::DoNotOptimize(anova(response, l9, assignment));
}
BENCHMARK(BM_AnovaL9);

static void BM_RangeAnalysisL9(benchmark::State& state) {
  const auto& l9 = catalog_lookup("L9(3^4)");
  const auto assignment = three_factors();
  const auto response = random_responses(9, 5);
  for (auto _ : state) benchmark::DoNotOptimize(range_analysis(response, l9, assignment));
}
BENCHMARK(BM_RangeAnalysisL9);

static void BM_FCdf(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_cdf(x, 2, 2));
    benchmark::DoNotOptimize(f_cdf(x, 5, 12));
    x += 0.01;
    if (x > 20.0) x = 0.01;
  }
}
BENCHMARK(BM_FCdf);

static void BM_ValidateCatalog(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& name : catalog_names())
      benchmark::DoNotOptimize(validate_array(catalog_lookup(name)));
}
BENCHMARK(BM_ValidateCatalog);

BENCHMARK_MAIN();
