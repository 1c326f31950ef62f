#include "liesurf/config.hpp"

#include <sstream>

#include "liesurf/embedded_data.hpp"

namespace liesurf {

namespace {

double* tolerance_field(Tolerances& t, const std::string& name) {
  if (name == "membership") return &t.membership;
  if (name == "rank") return &t.rank;
  if (name == "weight_rounding") return &t.weight_rounding;
  if (name == "mu_pairing") return &t.mu_pairing;
  if (name == "relation") return &t.relation;
  if (name == "period") return &t.period;
  if (name == "group") return &t.group;
  return nullptr;
}

double positive_number(const Json& j, const std::string& what) {
  if (!j.is_number() || !(j.get<double>() > 0)) throw ParameterError(what + " must be a positive number");
  return j.get<double>();
}

double parse_positive(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParameterError(what + ": not a number: " + s);
  }
  if (used != s.size() || !(v > 0)) throw ParameterError(what + " must be a positive number: " + s);
  return v;
}

}  // namespace

std::vector<double> Config::t_grid() const {
  if (t_grid_override) return *t_grid_override;
  std::vector<double> out;
  for (double b : t_grid_base) out.push_back(b * t_scale);
  return out;
}

void apply_config_json(Config& cfg, const Json& j) {
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    if (key == "tolerances") {
      if (!v.is_object()) throw ParameterError("tolerances must be an object");
      for (auto t = v.begin(); t != v.end(); ++t) {
        double* f = tolerance_field(cfg.tol, t.key());
        if (!f) throw ParameterError("unknown tolerance: " + t.key());
        *f = positive_number(t.value(), "tolerance " + t.key());
      }
    } else if (key == "t_grid") {
      if (!v.is_object()) throw ParameterError("t_grid must be an object");
      if (v.contains("base")) {
        if (!v["base"].is_array() || v["base"].empty()) throw ParameterError("t_grid.base must be a non-empty array");
        cfg.t_grid_base.clear();
        for (const auto& b : v["base"]) cfg.t_grid_base.push_back(positive_number(b, "t_grid.base entry"));
      }
      if (v.contains("scale")) cfg.t_scale = positive_number(v["scale"], "t_grid.scale");
    } else if (key == "pitchfork_radius") {
      cfg.pitchfork_radius = positive_number(v, key);
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ParameterError("seed must be a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "random_cases") {
      if (!v.is_number_integer() || v.get<long>() < 1) throw ParameterError("random_cases must be a positive integer");
      cfg.random_cases = v.get<int>();
    } else {
      throw ParameterError("unknown config key: " + key);
    }
  }
}

Config default_config() {
  Config cfg;
  apply_config_json(cfg, parse_json_text(embedded::kDefaultConfig, "default config"));
  return cfg;
}

Config load_config(const std::string& path) {
  Config cfg = default_config();
  apply_config_json(cfg, read_json_file(path));
  return cfg;
}

void apply_tolerance_override(Config& cfg, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ParameterError("--tol expects name=value, got " + assignment);
  std::string name = assignment.substr(0, eq);
  double* f = tolerance_field(cfg.tol, name);
  if (!f) throw ParameterError("unknown tolerance: " + name);
  *f = parse_positive(assignment.substr(eq + 1), "tolerance " + name);
}

void apply_t_grid_override(Config& cfg, const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_positive(item, "--t-grid entry"));
  if (out.empty()) throw ParameterError("--t-grid needs at least one value");
  cfg.t_grid_override = out;
}

Json config_echo(const Config& cfg) {
  Json j;
  j["tolerances"] = {{"membership", cfg.tol.membership},     {"rank", cfg.tol.rank},
                     {"weight_rounding", cfg.tol.weight_rounding}, {"mu_pairing", cfg.tol.mu_pairing},
                     {"relation", cfg.tol.relation},         {"period", cfg.tol.period},
                     {"group", cfg.tol.group}};
  j["t_grid"] = cfg.t_grid();
  j["pitchfork_radius"] = cfg.pitchfork_radius;
  j["seed"] = cfg.seed;
  return j;
}

}  // namespace liesurf
