#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsmem/types.hpp"

namespace rsmem {

/// Parsed scenario document. Field units are fixed: rates per day, times in
/// hours. Sweep lists apply to the analyze command only.
struct ScenarioFile {
  Arrangement arrangement = Arrangement::simplex;
  int n = 0, k = 0, m = 0;
  double lambda_bit_per_day = 0.0;
  double lambda_e_symbol_per_day = 0.0;
  std::optional<double> scrub_period_hours;  // absent = scrubbing disabled
  double horizon_hours = 0.0;
  std::optional<std::vector<double>> time_grid;
  std::optional<int> grid_points;
  RateMode rate_mode = RateMode::physical;
  std::optional<std::vector<double>> lambda_list;
  std::optional<std::vector<double>> scrub_period_list;

  bool has_sweep() const { return lambda_list.has_value() || scrub_period_list.has_value(); }
};

/// Parses the JSON document. Unknown keys are rejected. Throws ParseError
/// with a 1-based line number for malformed documents.
ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile load_scenario_file(const std::string& path);

/// `points` instants log-spaced from horizon/1000 to horizon inclusive.
std::vector<double> log_time_grid(double horizon_hours, int points);

/// Base scenario, sweeps ignored. Throws ConstraintViolated on bad values.
Scenario make_scenario(const ScenarioFile& file);

/// One analyze work item produced by sweep expansion, in deterministic
/// sweep order (lambda outer, scrub period inner).
struct SweepEntry {
  std::optional<double> lambda_bit_per_day;   // set when a lambda sweep is active
  std::optional<double> scrub_period_hours;   // set when a scrub-period sweep is active
  Scenario scenario;
};

std::vector<SweepEntry> expand_sweeps(const ScenarioFile& file);

/// Built-in scenario presets; each returns named JSON documents ready to be
/// written to disk.
struct PresetFile {
  std::string filename;
  std::string contents;
};
std::vector<std::string> preset_names();
std::string preset_description(const std::string& name);
std::vector<PresetFile> preset_files(const std::string& name);  // throws ConstraintViolated

}  // namespace rsmem
