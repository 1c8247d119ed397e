#include "rsmem/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "rsmem/errors.hpp"
#include "rsmem/model.hpp"

namespace rsmem {

namespace {

using json = nlohmann::ordered_json;

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

const std::set<std::string> kKnownKeys = {
    "arrangement",        "n",             "k",         "m",
    "lambda_bit_per_day", "lambda_e_symbol_per_day",    "scrub_period_hours",
    "horizon_hours",      "time_grid",     "grid_points", "rate_mode",
    "lambda_list",        "scrub_period_list"};

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ParseError(0, "key '" + key + "' must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ParseError(0, "key '" + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> as_number_list(const json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) throw ParseError(0, "key '" + key + "' must be a non-empty list");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(as_number(x, key));
  return out;
}

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_byte(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
  }
  if (!doc.is_object()) throw ParseError(1, "scenario document must be an object");

  for (const auto& [key, value] : doc.items()) {
    if (!kKnownKeys.count(key)) throw ParseError(0, "unknown key '" + key + "'");
    (void)value;
  }
  auto require = [&doc](const char* key) -> const json& {
    if (!doc.contains(key)) throw ParseError(0, std::string("missing required key '") + key + "'");
    return doc.at(key);
  };

  ScenarioFile f;
  const json& arrangement_value = require("arrangement");
  if (!arrangement_value.is_string()) throw ParseError(0, "key 'arrangement' must be a string");
  const std::string arrangement = arrangement_value.get<std::string>();
  if (arrangement == "simplex") {
    f.arrangement = Arrangement::simplex;
  } else if (arrangement == "duplex") {
    f.arrangement = Arrangement::duplex;
  } else {
    throw ParseError(0, "arrangement must be 'simplex' or 'duplex'");
  }

  f.n = as_int(require("n"), "n");
  f.k = as_int(require("k"), "k");
  f.m = as_int(require("m"), "m");
  f.lambda_bit_per_day = as_number(require("lambda_bit_per_day"), "lambda_bit_per_day");
  f.lambda_e_symbol_per_day =
      as_number(require("lambda_e_symbol_per_day"), "lambda_e_symbol_per_day");
  f.horizon_hours = as_number(require("horizon_hours"), "horizon_hours");

  if (doc.contains("scrub_period_hours")) {
    f.scrub_period_hours = as_number(doc["scrub_period_hours"], "scrub_period_hours");
  }
  if (doc.contains("time_grid")) f.time_grid = as_number_list(doc["time_grid"], "time_grid");
  if (doc.contains("grid_points")) f.grid_points = as_int(doc["grid_points"], "grid_points");
  if (f.time_grid.has_value() == f.grid_points.has_value()) {
    throw ParseError(0, "exactly one of 'time_grid' and 'grid_points' is required");
  }
  if (doc.contains("rate_mode")) {
    const json& v = doc["rate_mode"];
    if (!v.is_string()) throw ParseError(0, "key 'rate_mode' must be a string");
    const std::string mode = v.get<std::string>();
    if (mode == "physical") {
      f.rate_mode = RateMode::physical;
    } else if (mode == "paper-literal") {
      f.rate_mode = RateMode::paper_literal;
    } else {
      throw ParseError(0, "rate_mode must be 'physical' or 'paper-literal'");
    }
  }
  if (doc.contains("lambda_list")) f.lambda_list = as_number_list(doc["lambda_list"], "lambda_list");
  if (doc.contains("scrub_period_list")) {
    f.scrub_period_list = as_number_list(doc["scrub_period_list"], "scrub_period_list");
  }
  return f;
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

std::vector<double> log_time_grid(double horizon_hours, int points) {
  if (points < 1) throw ConstraintViolated("grid_points must be >= 1");
  if (!(horizon_hours > 0.0)) throw ConstraintViolated("horizon must be > 0");
  std::vector<double> grid;
  grid.reserve(points);
  if (points == 1) {
    grid.push_back(horizon_hours);
    return grid;
  }
  const double lo = std::log(horizon_hours / 1000.0);
  const double hi = std::log(horizon_hours);
  for (int i = 0; i < points; ++i) {
    grid.push_back(std::exp(lo + (hi - lo) * static_cast<double>(i) / (points - 1)));
  }
  grid.back() = horizon_hours;  // exact endpoint
  return grid;
}

Scenario make_scenario(const ScenarioFile& file) {
  Scenario s;
  s.arrangement = file.arrangement;
  s.code = validate_code(file.n, file.k, file.m);
  s.rates = FaultRates{file.lambda_bit_per_day, file.lambda_e_symbol_per_day};
  s.scrub = file.scrub_period_hours ? ScrubConfig::every(*file.scrub_period_hours)
                                    : ScrubConfig::disabled();
  s.horizon_hours = file.horizon_hours;
  s.rate_mode = file.rate_mode;
  s.time_grid = file.time_grid ? *file.time_grid : log_time_grid(file.horizon_hours, *file.grid_points);
  validate_scenario(s);
  return s;
}

std::vector<SweepEntry> expand_sweeps(const ScenarioFile& file) {
  std::vector<SweepEntry> entries;
  const std::vector<std::optional<double>> lambdas =
      file.lambda_list ? [&] {
        std::vector<std::optional<double>> v;
        for (double x : *file.lambda_list) v.emplace_back(x);
        return v;
      }()
                       : std::vector<std::optional<double>>{std::nullopt};
  const std::vector<std::optional<double>> periods =
      file.scrub_period_list ? [&] {
        std::vector<std::optional<double>> v;
        for (double x : *file.scrub_period_list) v.emplace_back(x);
        return v;
      }()
                             : std::vector<std::optional<double>>{std::nullopt};

  for (const auto& lambda : lambdas) {
    for (const auto& period : periods) {
      ScenarioFile variant = file;
      if (lambda) variant.lambda_bit_per_day = *lambda;
      if (period) variant.scrub_period_hours = *period;
      entries.push_back({lambda, period, make_scenario(variant)});
    }
  }
  return entries;
}

namespace {

json base_preset(const char* arrangement, int n, int k) {
  json doc;
  doc["arrangement"] = arrangement;
  doc["n"] = n;
  doc["k"] = k;
  doc["m"] = 8;
  return doc;
}

}  // namespace

std::vector<std::string> preset_names() { return {"case1", "case2", "case3"}; }

std::string preset_description(const std::string& name) {
  if (name == "case1") {
    return "simplex and duplex RS(18,16), SEU-rate sweep, no scrubbing, 48h storage";
  }
  if (name == "case2") {
    return "duplex RS(18,16), scrub-period sweep at the worst-case SEU rate, 48h storage";
  }
  if (name == "case3") {
    return "RS(18,16) simplex/duplex vs RS(36,16) simplex under permanent faults, 24 months";
  }
  return "";
}

std::vector<PresetFile> preset_files(const std::string& name) {
  // The SEU-rate ladder spans the conventional range quoted for on-orbit
  // exposure, 7.3e-7 to 1.7e-5 errors/bit/day.
  const json lambda_ladder = {7.3e-7, 1.7e-6, 7.3e-6, 1.7e-5};

  std::vector<PresetFile> files;
  auto push = [&files](const std::string& filename, json doc) {
    files.push_back({filename, doc.dump(2) + "\n"});
  };

  if (name == "case1") {
    for (const char* arrangement : {"simplex", "duplex"}) {
      json doc = base_preset(arrangement, 18, 16);
      doc["lambda_bit_per_day"] = 1.7e-5;
      doc["lambda_e_symbol_per_day"] = 0.0;
      doc["horizon_hours"] = 48.0;
      doc["grid_points"] = 40;
      doc["rate_mode"] = "paper-literal";
      doc["lambda_list"] = lambda_ladder;
      push(std::string("case1_") + arrangement + ".json", doc);
    }
  } else if (name == "case2") {
    json doc = base_preset("duplex", 18, 16);
    doc["lambda_bit_per_day"] = 1.7e-5;
    doc["lambda_e_symbol_per_day"] = 0.0;
    doc["scrub_period_hours"] = 1.0;
    doc["horizon_hours"] = 48.0;
    doc["grid_points"] = 40;
    doc["rate_mode"] = "paper-literal";
    doc["scrub_period_list"] = {48.0, 24.0, 12.0, 6.0, 2.0, 1.0};
    push("case2_duplex.json", doc);
  } else if (name == "case3") {
    struct System {
      const char* tag;
      const char* arrangement;
      int n;
    };
    // The permanent-fault rate is a free input; edit lambda_e_symbol_per_day
    // to trace additional curves.
    for (const System& sys : {System{"simplex18", "simplex", 18},
                              System{"duplex18", "duplex", 18},
                              System{"simplex36", "simplex", 36}}) {
      json doc = base_preset(sys.arrangement, sys.n, 16);
      doc["lambda_bit_per_day"] = 1.7e-5;
      doc["lambda_e_symbol_per_day"] = 1.0e-4;
      doc["horizon_hours"] = 17520.0;  // 24 months
      doc["grid_points"] = 40;
      doc["rate_mode"] = "paper-literal";
      push(std::string("case3_") + sys.tag + ".json", doc);
    }
  } else {
    throw ConstraintViolated("unknown preset '" + name + "'");
  }
  return files;
}

}  // namespace rsmem
