#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liesurf/json_io.hpp"
#include "liesurf/types.hpp"

namespace liesurf {

struct Config {
  Tolerances tol;
  std::vector<double> t_grid_base{1e-2, 1e-3, 1e-4};
  double t_scale = 1.6180339887498949;
  std::optional<std::vector<double>> t_grid_override;  // effective values, unscaled
  double pitchfork_radius = 5.0;
  std::uint64_t seed = 20240611;
  int random_cases = 100;

  std::vector<double> t_grid() const;
};

/// The compiled-in config/default.json.
Config default_config();
/// Overlays a JSON config file on the defaults. Unknown keys are rejected.
Config load_config(const std::string& path);
void apply_config_json(Config& cfg, const Json& j);
/// "name=value" for one tolerance field.
void apply_tolerance_override(Config& cfg, const std::string& assignment);
/// Comma-separated list of positive values.
void apply_t_grid_override(Config& cfg, const std::string& list);

Json config_echo(const Config& cfg);

}  // namespace liesurf
