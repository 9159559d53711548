#include "robustdoe/surrogate.hpp"

#include <cmath>
#include <numbers>

#include "robustdoe/error.hpp"

namespace robustdoe {

namespace {
constexpr double kGravity = 9.81;  // m/s^2
}

void SurrogateParams::validate() const {
  if (!(strain_rate_c > 0.0) || !(strain_rate_p > 0.0))
    throw Error(Errc::invalid_argument, "strain rate constants C and P must be positive");
  if (!(reference_strain_rate >= 0.0))
    throw Error(Errc::invalid_argument, "reference strain rate must be nonnegative");
  if (!(impact_angle_deg > 0.0 && impact_angle_deg < 90.0))
    throw Error(Errc::invalid_argument, "impact angle must lie in (0, 90) degrees");
  if (!(post_section_weight > 0.0) || !(beam_section_weight > 0.0))
    throw Error(Errc::invalid_argument, "section weights must be positive");
  if (!(deflection_scale > 0.0))
    throw Error(Errc::invalid_argument, "deflection scale must be positive");
}

double cowper_symonds(double sigma0, double strain_rate, double c, double p) {
  if (!(c > 0.0) || !(p > 0.0))
    throw Error(Errc::invalid_argument, "Cowper-Symonds constants C and P must be positive");
  if (!(sigma0 > 0.0))
    throw Error(Errc::invalid_argument, "initial yield stress must be positive");
  if (!(strain_rate >= 0.0))
    throw Error(Errc::invalid_argument, "strain rate must be nonnegative");
  return (1.0 + std::pow(strain_rate / c, 1.0 / p)) * sigma0;
}

CrashResponse crash_response(const CrashInputs& in, const SurrogateParams& params) {
  params.validate();
  for (double v : {in.post_thickness_mm, in.beam_thickness_mm, in.post_spacing_mm,
                   in.velocity_kmh, in.mass_kg, in.yield_stress_mpa})
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(Errc::invalid_argument, "crash inputs must be positive and finite");

  const double angle_rad = params.impact_angle_deg * std::numbers::pi / 180.0;
  const double v_normal = in.velocity_kmh / 3.6 * std::sin(angle_rad);
  const double sigma_dyn = cowper_symonds(in.yield_stress_mpa, params.reference_strain_rate,
                                          params.strain_rate_c, params.strain_rate_p);

  const double section = params.post_section_weight * std::pow(in.post_thickness_mm, 3) +
                         params.beam_section_weight * std::pow(in.beam_thickness_mm, 3);
  const double stiffness = sigma_dyn * section / in.post_spacing_mm;

  CrashResponse out;
  out.acceleration_g = v_normal * std::sqrt(stiffness / in.mass_kg) / kGravity;
  out.deflection_mm = params.deflection_scale * v_normal * std::sqrt(in.mass_kg / stiffness);
  return out;
}

}  // namespace robustdoe
