#include "rsmem/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <vector>

#include "rsmem/chain.hpp"
#include "rsmem/errors.hpp"
#include "rsmem/metrics.hpp"
#include "rsmem/model.hpp"
#include "rsmem/solver.hpp"

namespace rsmem::cli {

namespace {

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

std::string compact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Runs `body`, translating the domain errors into exit codes. Output the
// body wrote into its buffer reaches `out` only on success.
template <class Body>
int guarded(std::ostream& out, std::ostream& err, Body&& body) {
  std::ostringstream buffer;
  try {
    body(buffer);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ConstraintViolated& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ModelTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitModelTooLarge;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
  out << buffer.str();
  return kExitOk;
}

ScenarioFile load_for(const std::string& path, std::optional<RateMode> mode_override) {
  ScenarioFile file = load_scenario_file(path);
  if (mode_override) file.rate_mode = *mode_override;
  return file;
}

}  // namespace

int cmd_analyze(const std::string& scenario_path, double tol,
                std::optional<RateMode> mode_override, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& buffer) {
    const ScenarioFile file = load_for(scenario_path, mode_override);
    const std::vector<SweepEntry> entries = expand_sweeps(file);

    std::vector<std::future<BerSeries>> futures;
    futures.reserve(entries.size());
    for (const SweepEntry& entry : entries) {
      futures.push_back(std::async(std::launch::async,
                                   [&entry, tol] { return ber_curve(entry.scenario, tol); }));
    }

    for (std::size_t i = 0; i < entries.size(); ++i) {
      const BerSeries series = futures[i].get();
      if (i > 0) buffer << "\n";
      buffer << "time_hours,p_fail,ber";
      if (entries[i].lambda_bit_per_day) buffer << ",lambda_bit_per_day";
      if (entries[i].scrub_period_hours) buffer << ",scrub_period_hours";
      buffer << "\n";
      for (const BerPoint& p : series.points) {
        buffer << sci(p.time_hours) << "," << sci(p.p_fail) << "," << sci(p.ber);
        if (entries[i].lambda_bit_per_day) buffer << "," << sci(*entries[i].lambda_bit_per_day);
        if (entries[i].scrub_period_hours) buffer << "," << sci(*entries[i].scrub_period_hours);
        buffer << "\n";
      }
    }
  });
}

int cmd_mc(const std::string& scenario_path, std::uint64_t trials, std::uint64_t seed,
           ScrubDiscipline discipline, std::optional<RateMode> mode_override, std::ostream& out,
           std::ostream& err) {
  return guarded(out, err, [&](std::ostream& buffer) {
    const ScenarioFile file = load_for(scenario_path, mode_override);
    if (file.has_sweep()) {
      throw ConstraintViolated("mc does not support sweep blocks; use a single-point scenario");
    }
    McConfig cfg;
    cfg.scenario = make_scenario(file);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.discipline = discipline;
    const McEstimate est = estimate(cfg);
    buffer << "p_fail_hat,ci95,ber_hat,trials\n"
           << sci(est.p_fail_hat) << "," << sci(est.ci_halfwidth_95) << "," << sci(est.ber_hat)
           << "," << est.trials << "\n";
  });
}

int cmd_states(const std::string& scenario_path, std::optional<RateMode> mode_override,
               std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& buffer) {
    const ScenarioFile file = load_for(scenario_path, mode_override);
    if (file.has_sweep()) {
      throw ConstraintViolated("states does not support sweep blocks; use a single-point scenario");
    }
    write_chain_dump(build_ctmc(make_scenario(file)), buffer);
  });
}

int cmd_metrics(int n, int k, int m, const std::string& arrangement, std::ostream& out,
                std::ostream& err) {
  return guarded(out, err, [&](std::ostream& buffer) {
    Arrangement arr;
    if (arrangement == "simplex") {
      arr = Arrangement::simplex;
    } else if (arrangement == "duplex") {
      arr = Arrangement::duplex;
    } else {
      throw ConstraintViolated("arrangement must be 'simplex' or 'duplex'");
    }
    const CodeParams code = validate_code(n, k, m);
    buffer << "t_d_cycles,overhead\n"
           << decode_latency_cycles(code) << "," << compact(storage_overhead(arr, code)) << "\n";
    err << "note: decoder gate count grows about linearly with m and n-k, so two half-length"
           " decoders are expected to be smaller than one double-length decoder.\n";
  });
}

int cmd_presets(const std::string& name, const std::string& out_dir, std::ostream& out,
                std::ostream& err) {
  return guarded(out, err, [&](std::ostream& buffer) {
    if (name.empty()) {
      for (const std::string& preset : preset_names()) {
        buffer << preset << "  " << preset_description(preset) << "\n";
      }
      return;
    }
    const std::vector<PresetFile> files = preset_files(name);
    std::filesystem::create_directories(out_dir);
    for (const PresetFile& file : files) {
      const std::filesystem::path path = std::filesystem::path(out_dir) / file.filename;
      std::ofstream stream(path, std::ios::binary);
      if (!stream) throw ConstraintViolated("cannot write '" + path.string() + "'");
      stream << file.contents;
      buffer << path.string() << "\n";
    }
  });
}

}  // namespace rsmem::cli
