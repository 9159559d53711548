#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "robustdoe/surrogate.hpp"
#include "robustdoe/error.hpp"
#include "support/fixtures.hpp"

using namespace robustdoe;

namespace {

SurrogateParams shipped_params() {
  SurrogateParams p;
  p.strain_rate_c = 40.0;
  p.strain_rate_p = 5.0;
  p.reference_strain_rate = 10.0;
  p.impact_angle_deg = 20.0;
  p.post_section_weight = 50000.0;
  p.beam_section_weight = 50000.0;
  p.deflection_scale = 1200.0;
  return p;
}

CrashInputs baseline() {
  CrashInputs in;
  in.post_thickness_mm = 4.5;
  in.beam_thickness_mm = 4.0;
  in.post_spacing_mm = 2000.0;
  in.velocity_kmh = 80.0;
  in.mass_kg = 10000.0;
  in.yield_stress_mpa = 235.0;
  return in;
}

}  // namespace

TEST_CASE("Cowper-Symonds scaling") {
  CHECK(cowper_symonds(235, 0, 40, 5) == doctest::Approx(235.0));
  CHECK(cowper_symonds(235, 40, 40, 5) == doctest::Approx(470.0));
  // direct evaluation of 240*(1 + 0.25^0.2)
  CHECK(cowper_symonds(240, 10, 40, 5) == doctest::Approx(421.88598798124777).epsilon(1e-12));
  CHECK(std::abs(cowper_symonds(240, 10, 40, 5) - 421.886) < 0.01);
}

TEST_CASE("Cowper-Symonds rejects nonpositive constants") {
  for (auto [c, p] : {std::pair{0.0, 5.0}, {-40.0, 5.0}, {40.0, 0.0}, {40.0, -5.0}}) {
    try {
      cowper_symonds(235, 10, c, p);
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_argument);
    }
  }
  CHECK_THROWS_AS(cowper_symonds(-1, 10, 40, 5), Error);
  CHECK_THROWS_AS(cowper_symonds(235, -1, 40, 5), Error);
}

TEST_CASE("Cowper-Symonds is monotone in the strain rate") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> rate(0.0, 200.0);
  for (int iter = 0; iter < 120; ++iter) {
    double a = rate(rng), b = rate(rng);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    CHECK(cowper_symonds(235, a, 40, 5) < cowper_symonds(235, b, 40, 5));
  }
}

TEST_CASE("baseline cell matches the frozen golden response") {
  const auto r = crash_response(baseline(), shipped_params());
  CHECK(r.acceleration_g ==
        doctest::Approx(fixtures::kSurrogateGoldenAcceleration).epsilon(1e-12));
  CHECK(r.deflection_mm == doctest::Approx(fixtures::kSurrogateGoldenDeflection).epsilon(1e-12));
}

TEST_CASE("crash_response is pure: identical inputs, bit-identical outputs") {
  const auto a = crash_response(baseline(), shipped_params());
  const auto b = crash_response(baseline(), shipped_params());
  CHECK(a.acceleration_g == b.acceleration_g);
  CHECK(a.deflection_mm == b.deflection_mm);
}

TEST_CASE("doubling the stiffness scales a by sqrt(2) and D by 1/sqrt(2)") {
  auto params = shipped_params();
  const auto base = crash_response(baseline(), params);
  params.post_section_weight *= 2.0;  // K is linear in the section weights
  params.beam_section_weight *= 2.0;
  const auto doubled = crash_response(baseline(), params);
  CHECK(doubled.acceleration_g ==
        doctest::Approx(base.acceleration_g * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(doubled.deflection_mm ==
        doctest::Approx(base.deflection_mm / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("the product a*D depends only on speed and the calibration scale") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> thickness(2.0, 6.0);
  std::uniform_real_distribution<double> spacing(1000.0, 3000.0);
  std::uniform_real_distribution<double> mass(8000.0, 12000.0);
  std::uniform_real_distribution<double> stress(200.0, 300.0);
  const auto params = shipped_params();
  const double v = 80.0;
  const double v_normal = v / 3.6 * std::sin(params.impact_angle_deg * M_PI / 180.0);
  const double expected = params.deflection_scale * v_normal * v_normal / 9.81;
  for (int iter = 0; iter < 120; ++iter) {
    CrashInputs in = baseline();
    in.post_thickness_mm = thickness(rng);
    in.beam_thickness_mm = thickness(rng);
    in.post_spacing_mm = spacing(rng);
    in.mass_kg = mass(rng);
    in.yield_stress_mpa = stress(rng);
    const auto r = crash_response(in, params);
    CHECK(r.acceleration_g * r.deflection_mm == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("response monotonicity in each input") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> bump(1.05, 1.5);
  const auto params = shipped_params();
  for (int iter = 0; iter < 150; ++iter) {
    CrashInputs in = baseline();
    std::uniform_real_distribution<double> jitter(0.8, 1.2);
    in.post_thickness_mm *= jitter(rng);
    in.beam_thickness_mm *= jitter(rng);
    in.post_spacing_mm *= jitter(rng);
    in.mass_kg *= jitter(rng);
    in.yield_stress_mpa *= jitter(rng);
    in.velocity_kmh *= jitter(rng);
    const auto base = crash_response(in, params);
    const double k = bump(rng);

    auto grown = in;  // stiffer post: a up, D down
    grown.post_thickness_mm *= k;
    auto r = crash_response(grown, params);
    CHECK(r.acceleration_g > base.acceleration_g);
    CHECK(r.deflection_mm < base.deflection_mm);

    grown = in;  // stiffer beam
    grown.beam_thickness_mm *= k;
    r = crash_response(grown, params);
    CHECK(r.acceleration_g > base.acceleration_g);
    CHECK(r.deflection_mm < base.deflection_mm);

    grown = in;  // stronger steel
    grown.yield_stress_mpa *= k;
    r = crash_response(grown, params);
    CHECK(r.acceleration_g > base.acceleration_g);
    CHECK(r.deflection_mm < base.deflection_mm);

    grown = in;  // faster impact: both up
    grown.velocity_kmh *= k;
    r = crash_response(grown, params);
    CHECK(r.acceleration_g > base.acceleration_g);
    CHECK(r.deflection_mm > base.deflection_mm);

    grown = in;  // heavier vehicle: a down, D up
    grown.mass_kg *= k;
    r = crash_response(grown, params);
    CHECK(r.acceleration_g < base.acceleration_g);
    CHECK(r.deflection_mm > base.deflection_mm);
  }
}

TEST_CASE("nonpositive inputs and bad parameters are rejected") {
  const auto params = shipped_params();
  auto in = baseline();
  in.mass_kg = 0.0;
  CHECK_THROWS_AS(crash_response(in, params), Error);
  in = baseline();
  in.velocity_kmh = -10.0;
  CHECK_THROWS_AS(crash_response(in, params), Error);

  auto bad = shipped_params();
  bad.strain_rate_c = 0.0;
  CHECK_THROWS_AS(crash_response(baseline(), bad), Error);
  bad = shipped_params();
  bad.impact_angle_deg = 90.0;
  CHECK_THROWS_AS(crash_response(baseline(), bad), Error);
  bad = shipped_params();
  bad.deflection_scale = -1.0;
  CHECK_THROWS_AS(crash_response(baseline(), bad), Error);
}
