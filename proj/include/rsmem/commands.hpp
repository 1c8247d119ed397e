#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "rsmem/oracle.hpp"
#include "rsmem/scenario.hpp"
#include "rsmem/types.hpp"

namespace rsmem::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitModelTooLarge = 3;
inline constexpr int kExitNumericalFailure = 4;

/// BER(t) CSV: `time_hours,p_fail,ber` plus one sweep-value column per
/// active sweep list. Sweep entries run concurrently; blocks are emitted in
/// sweep order. Nothing is written to `out` on failure.
int cmd_analyze(const std::string& scenario_path, double tol,
                std::optional<RateMode> mode_override, std::ostream& out, std::ostream& err);

/// Single-row CSV `p_fail_hat,ci95,ber_hat,trials`. Rejects sweep files.
int cmd_mc(const std::string& scenario_path, std::uint64_t trials, std::uint64_t seed,
           ScrubDiscipline discipline, std::optional<RateMode> mode_override, std::ostream& out,
           std::ostream& err);

/// Enumerated states plus the edge list of the chain. Rejects sweep files.
int cmd_states(const std::string& scenario_path, std::optional<RateMode> mode_override,
               std::ostream& out, std::ostream& err);

/// One-row CSV `t_d_cycles,overhead`; a qualitative decoder-area note goes
/// to `err`.
int cmd_metrics(int n, int k, int m, const std::string& arrangement, std::ostream& out,
                std::ostream& err);

/// Without a name: lists available presets. With a name: writes the
/// preset's scenario files into `out_dir` and prints their paths.
int cmd_presets(const std::string& name, const std::string& out_dir, std::ostream& out,
                std::ostream& err);

}  // namespace rsmem::cli
