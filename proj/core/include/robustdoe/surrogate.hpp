#pragma once

namespace robustdoe {

// Deterministic lumped-parameter vehicle-barrier impact surrogate. Produces
// (acceleration, deflection) for any crossed-design cell so the pipeline can
// run end to end without external simulation software. Single-DOF elastic
// closed form; no claim of crash-physics fidelity.

struct SurrogateParams {
  double strain_rate_c = 40.0;          // Cowper-Symonds C, 1/s
  double strain_rate_p = 5.0;           // Cowper-Symonds P
  double reference_strain_rate = 10.0;  // 1/s, fixed rather than kinematic
  double impact_angle_deg = 20.0;
  double post_section_weight = 50000.0;  // w1, scales post thickness^3
  double beam_section_weight = 50000.0;  // w2, scales beam thickness^3
  double deflection_scale = 1200.0;      // mm per (m/s * sqrt(kg s^2/N))

  // Throws InvalidArgument unless C > 0, P > 0, 0 < angle < 90, weights > 0,
  // scale > 0, reference strain rate >= 0.
  void validate() const;
};

// Dynamic yield stress sigma = [1 + (strain_rate/C)^(1/P)] * sigma0.
// Throws InvalidArgument for nonpositive sigma0, C or P, or negative rate.
double cowper_symonds(double sigma0, double strain_rate, double c, double p);

struct CrashInputs {
  double post_thickness_mm = 0.0;
  double beam_thickness_mm = 0.0;
  double post_spacing_mm = 0.0;
  double velocity_kmh = 0.0;
  double mass_kg = 0.0;
  double yield_stress_mpa = 0.0;
};

struct CrashResponse {
  double acceleration_g = 0.0;
  double deflection_mm = 0.0;
};

// Closed-form single-DOF impact response:
//   v_n = (v/3.6) * sin(angle)                      normal impact speed, m/s
//   sigma_d = cowper_symonds(sigma0, eps_ref, C, P)
//   K = sigma_d * (w1*t_p^3 + w2*t_b^3) / s         lateral stiffness proxy
//   a = v_n * sqrt(K/m) / 9.81                      peak acceleration, g
//   D = scale * v_n * sqrt(m/K)                     peak deflection, mm
// Pure function; all inputs must be positive (throws InvalidArgument).
CrashResponse crash_response(const CrashInputs& inputs, const SurrogateParams& params);

}  // namespace robustdoe
