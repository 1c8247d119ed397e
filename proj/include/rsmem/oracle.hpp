#pragma once

#include <cstdint>

#include "rsmem/types.hpp"

namespace rsmem {

enum class ScrubDiscipline {
  exponential,          // scrub instants form a Poisson process at rate 1/T_sc
  deterministic_period  // scrub at T_sc, 2*T_sc, ... (first scrub at T_sc)
};

struct McConfig {
  Scenario scenario;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  ScrubDiscipline discipline = ScrubDiscipline::exponential;
  unsigned workers = 0;  // 0 = pick from hardware; result is identical either way
};

struct McEstimate {
  double p_fail_hat = 0.0;         // plain failure frequency
  double ci_halfwidth_95 = 0.0;    // Wilson 95% half-width; 0 when all trials agree
  double ber_hat = 0.0;            // coefficient * p_fail_hat
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
};

/// Seed for trial `index`: element `index` of the SplitMix64 stream started
/// at `master`. Makes trials independent of scheduling order.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

/// Simulates one stored word (or word pair) over [0, horizon] at per-symbol
/// resolution and returns true when the configuration ever becomes
/// unreadable (the unrecoverable state is absorbing, so the outcome at the
/// horizon is exactly "was it ever entered").
bool simulate_once(const Scenario& s, ScrubDiscipline discipline, std::uint64_t seed);

/// Runs cfg.trials independent simulations with per-trial seeds from
/// trial_seed(). Bit-identical results for identical configs regardless of
/// worker count.
McEstimate estimate(const McConfig& cfg);

}  // namespace rsmem
