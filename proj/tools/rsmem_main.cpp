// rsmem: BER analysis of RS-coded simplex/duplex memory words under SEUs,
// permanent faults and scrubbing. See README.md for the scenario format.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rsmem/commands.hpp"

namespace {

std::optional<rsmem::RateMode> parse_mode(const std::string& mode, bool present) {
  if (!present) return std::nullopt;
  if (mode == "physical") return rsmem::RateMode::physical;
  return rsmem::RateMode::paper_literal;
}

// Routes command output to --out when given, stdout otherwise.
struct OutputTarget {
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      ok = static_cast<bool>(file);
    }
  }
  std::ostream& stream() { return file.is_open() ? static_cast<std::ostream&>(file) : std::cout; }
  std::ofstream file;
  bool ok = true;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliability analysis of Reed-Solomon protected memory words"};
  app.require_subcommand(1);

  std::string file_path, out_path, mode, discipline = "exponential", arrangement;
  double tol = 1e-10;
  std::uint64_t trials = 100000, seed = 1;
  int n = 0, k = 0, m = 0;

  auto add_mode = [&mode](CLI::App* cmd) {
    return cmd->add_option("--mode", mode, "Rate mode: physical or paper-literal")
        ->check(CLI::IsMember({"physical", "paper-literal"}));
  };
  auto add_file = [&file_path](CLI::App* cmd) {
    return cmd->add_option("--file", file_path, "Scenario file (JSON)")->required();
  };
  auto add_out = [&out_path](CLI::App* cmd) {
    return cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Solve the chain and emit BER(t) CSV");
  add_file(analyze);
  add_out(analyze);
  auto* analyze_mode = add_mode(analyze);
  analyze->add_option("--tol", tol, "Transient-solver tolerance")->check(CLI::PositiveNumber);

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo fault injection estimate");
  add_file(mc);
  add_out(mc);
  auto* mc_mode = add_mode(mc);
  mc->add_option("--trials", trials, "Number of independent trials");
  mc->add_option("--seed", seed, "Master seed");
  mc->add_option("--discipline", discipline, "Scrub discipline")
      ->check(CLI::IsMember({"exponential", "deterministic", "deterministic-period"}));

  CLI::App* states = app.add_subcommand("states", "Dump the enumerated chain");
  add_file(states);
  add_out(states);
  auto* states_mode = add_mode(states);

  CLI::App* metrics = app.add_subcommand("metrics", "Decoder latency and storage overhead");
  metrics->add_option("n", n, "Symbols per codeword")->required();
  metrics->add_option("k", k, "Data symbols per codeword")->required();
  metrics->add_option("m", m, "Bits per symbol")->required();
  metrics->add_option("arrangement", arrangement, "simplex or duplex")->required();
  add_out(metrics);

  CLI::App* presets = app.add_subcommand("presets", "List or emit built-in scenario presets");
  std::string preset_name, preset_dir = ".";
  presets->add_option("name", preset_name, "Preset to write (omit to list)");
  presets->add_option("--out", preset_dir, "Directory for the generated files");

  CLI11_PARSE(app, argc, argv);

  OutputTarget target(out_path);
  if (!target.ok) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return rsmem::cli::kExitInputError;
  }

  if (analyze->parsed()) {
    return rsmem::cli::cmd_analyze(file_path, tol, parse_mode(mode, analyze_mode->count() > 0),
                                   target.stream(), std::cerr);
  }
  if (mc->parsed()) {
    const auto scrub_discipline = discipline == "exponential"
                                      ? rsmem::ScrubDiscipline::exponential
                                      : rsmem::ScrubDiscipline::deterministic_period;
    return rsmem::cli::cmd_mc(file_path, trials, seed, scrub_discipline,
                              parse_mode(mode, mc_mode->count() > 0), target.stream(), std::cerr);
  }
  if (states->parsed()) {
    return rsmem::cli::cmd_states(file_path, parse_mode(mode, states_mode->count() > 0),
                                  target.stream(), std::cerr);
  }
  if (metrics->parsed()) {
    return rsmem::cli::cmd_metrics(n, k, m, arrangement, target.stream(), std::cerr);
  }
  return rsmem::cli::cmd_presets(preset_name, preset_dir, target.stream(), std::cerr);
}
