#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liesurf/report.hpp"

using namespace liesurf;

namespace {

struct Globals {
  std::string config;
  std::vector<std::string> tol;
  std::string t_grid;
  bool witness = false;
  bool json = false;
  bool text = false;
  bool timing = false;
  bool serial = false;
  std::string out;
};

ReportOptions options_from(const Globals& g) {
  ReportOptions opt;
  opt.cfg = g.config.empty() ? default_config() : load_config(g.config);
  for (const auto& t : g.tol) apply_tolerance_override(opt.cfg, t);
  if (!g.t_grid.empty()) apply_t_grid_override(opt.cfg, g.t_grid);
  opt.timing = g.timing;
  opt.exec = g.serial ? Exec::serial : Exec::parallel;
  return opt;
}

int emit(const Report& r, const Globals& g) {
  std::string body = g.json ? dump_json(r.doc) + "\n" : render_text(r.doc, g.witness);
  if (g.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw ParameterError("cannot write " + g.out);
    f << body;
  }
  return r.matches ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper actions and surface-group bending on reductive symmetric spaces"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "JSON config overlaid on the defaults")->check(CLI::ExistingFile);
  app.add_option("--tol", g.tol, "Tolerance override name=value (repeatable)");
  app.add_option("--t-grid", g.t_grid, "Comma-separated bending parameters");
  app.add_flag("--witness", g.witness, "Print witnesses and certificates in text output");
  auto* json_flag = app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--text", g.text, "Aligned text output (default)")->excludes(json_flag);
  app.add_flag("--timing", g.timing, "Record runtimes (output no longer byte-stable)");
  app.add_flag("--serial", g.serial, "Run kernels without OpenMP");
  app.add_option("--out", g.out, "Write the report to a file");
  app.fallthrough();

  auto* reproduce = app.add_subcommand("reproduce", "Reproduce a worked example");
  reproduce->require_subcommand(1);
  auto* sec53 = reproduce->add_subcommand("sec53", "sl(5,R) partition table");
  auto* sec6 = reproduce->add_subcommand("sec6", "su(p,q) table for rho1 and rho2");
  std::optional<int> p, q;
  sec6->add_option("--p", p, "p (default: the grid up to 6)");
  sec6->add_option("--q", q, "q");

  auto* bend = app.add_subcommand("bend", "Bend a Fuchsian representation and certify density");
  std::string preset, plan_file;
  auto* preset_opt = bend->add_option("--preset", preset, "Preset name");
  bend->add_option("--plan", plan_file, "Plan JSON file")->excludes(preset_opt);
  bool list = false;
  bend->add_flag("--list", list, "List presets");

  auto* check = app.add_subcommand("check", "Calabi-Markus and Benoist verdicts for a given a_h");
  std::string family, ah_file;
  std::vector<int> params;
  check->add_option("--family", family, "sl or su")->required()->check(CLI::IsMember({"sl", "su"}));
  check->add_option("--params", params, "n, or p q")->required();
  check->add_option("--ah", ah_file, "a_h JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ReportOptions opt = options_from(g);
    if (sec53->parsed()) return emit(reproduce_sec53(opt), g);
    if (sec6->parsed()) {
      if (p.has_value() != q.has_value()) throw ParameterError("--p and --q go together");
      std::optional<std::pair<int, int>> pq;
      if (p) pq = std::make_pair(*p, *q);
      return emit(reproduce_sec6(opt, pq), g);
    }
    if (bend->parsed()) {
      if (list) {
        for (const auto& n : preset_names()) std::cout << n << "\n";
        return 0;
      }
      if (preset.empty() == plan_file.empty()) throw ParameterError("bend needs exactly one of --preset, --plan");
      Json plan = preset.empty() ? read_json_file(plan_file) : load_preset(preset);
      return emit(bend_report(plan, opt), g);
    }
    if (check->parsed()) return emit(check_report(family, params, read_json_file(ah_file), opt), g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
