#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "robustdoe/domain.hpp"
#include "robustdoe/surrogate.hpp"

namespace robustdoe {

// Strict JSON loaders: unknown keys are rejected (ParseError) so typos in
// spec files fail loudly instead of being ignored.

DesignSpec parse_design_spec(std::string_view json_text, std::string_view origin);
DesignSpec load_design_spec(const std::filesystem::path& path);

// Simulation configuration: surrogate model constants plus the mapping from
// surrogate roles to the spec's factor/objective names.
struct SimulationConfig {
  SurrogateParams params;
  // role -> factor name; roles: post_thickness, beam_thickness, post_spacing,
  // velocity, mass, yield_stress
  std::map<std::string, std::string> factor_roles;
  std::string acceleration_objective = "acceleration";
  std::string deflection_objective = "deflection";
  std::string notes;
};

SimulationConfig parse_simulation_config(std::string_view json_text, std::string_view origin);
SimulationConfig load_simulation_config(const std::filesystem::path& path);

}  // namespace robustdoe
