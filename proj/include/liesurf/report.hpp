#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesurf/config.hpp"
#include "liesurf/json_io.hpp"

namespace liesurf {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
  Config cfg = default_config();
  bool timing = false;  // add runtimes; reports are then no longer byte-stable
  Exec exec = Exec::parallel;
};

struct Report {
  Json doc;
  bool matches = true;  // every verdict agrees with its expectation
};

/// The sl(5,R) partition table against the compiled-in golden file.
Report reproduce_sec53(const ReportOptions& opt);
/// One (p, q), or the whole grid 1 <= q <= p <= 6 when pq is empty.
Report reproduce_sec6(const ReportOptions& opt, std::optional<std::pair<int, int>> pq = std::nullopt);
/// Full bending pipeline for a plan document (see presets/).
Report bend_report(const Json& plan, const ReportOptions& opt);
/// Calabi-Markus and Benoist verdicts for a user a_h, plus an even witness for sl(n,R).
Report check_report(const std::string& family, const std::vector<int>& params, const Json& ah,
                    const ReportOptions& opt);

std::string preset_directory();
std::vector<std::string> preset_names();
Json load_preset(const std::string& name);

/// Aligned plain-text rendering; witnesses and certificates only with `witness`.
std::string render_text(const Json& doc, bool witness);

}  // namespace liesurf
