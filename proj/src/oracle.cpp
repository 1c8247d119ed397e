#include "rsmem/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "rsmem/errors.hpp"
#include "rsmem/model.hpp"

namespace rsmem {

namespace {

constexpr double kHoursPerDay = 24.0;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1)
}

double exponential_sample(std::mt19937_64& gen, double rate) {
  return -std::log1p(-uniform01(gen)) / rate;
}

std::size_t pick_index(std::mt19937_64& gen, std::size_t count) {
  const auto idx = static_cast<std::size_t>(uniform01(gen) * static_cast<double>(count));
  return std::min(idx, count - 1);
}

enum Status : std::uint8_t { kClean = 0, kError = 1, kErased = 2 };

// Symbol-level walk shared by both arrangements. `Word` tells callbacks
// which module a symbol belongs to; simplex uses a single word.
struct TrialDriver {
  double horizon;
  double event_rate;       // total rate of the merged symbol event process
  double scrub_exp_rate;   // 0 unless exponential scrubbing
  double next_fixed_scrub; // +inf unless deterministic scrubbing
  double scrub_period;
};

template <class OnEvent, class OnScrub>
bool run_trial(std::mt19937_64& gen, const TrialDriver& d, std::size_t symbol_count,
               double erasure_share, OnEvent&& on_event, OnScrub&& on_scrub) {
  double now = 0.0;
  double next_fixed = d.next_fixed_scrub;
  const double total_rate = d.event_rate + d.scrub_exp_rate;
  while (true) {
    double next_random =
        total_rate > 0.0 ? now + exponential_sample(gen, total_rate)
                         : std::numeric_limits<double>::infinity();
    if (next_fixed <= next_random) {
      if (next_fixed > d.horizon) return false;
      now = next_fixed;
      next_fixed += d.scrub_period;
      if (on_scrub()) return true;
      continue;
    }
    if (next_random > d.horizon) return false;
    now = next_random;
    if (d.scrub_exp_rate > 0.0 && uniform01(gen) * total_rate < d.scrub_exp_rate) {
      if (on_scrub()) return true;
      continue;
    }
    const bool is_erasure = uniform01(gen) < erasure_share;
    const std::size_t symbol = pick_index(gen, symbol_count);
    if (on_event(symbol, is_erasure)) return true;
  }
}

bool simulate_simplex(const Scenario& s, ScrubDiscipline discipline, std::mt19937_64& gen) {
  const int n = s.code.n;
  const int parity = s.code.parity();
  const double seu_per_symbol = s.code.m * s.rates.lambda_bit_per_day / kHoursPerDay;
  const double erasure_per_symbol = s.rates.lambda_e_symbol_per_day / kHoursPerDay;

  std::vector<std::uint8_t> status(n, kClean);
  int erased = 0, errored = 0;

  TrialDriver driver;
  driver.horizon = s.horizon_hours;
  driver.event_rate = n * (seu_per_symbol + erasure_per_symbol);
  driver.scrub_exp_rate =
      s.scrub.enabled && discipline == ScrubDiscipline::exponential ? 1.0 / s.scrub.period_hours
                                                                    : 0.0;
  driver.scrub_period = s.scrub.enabled ? s.scrub.period_hours : 0.0;
  driver.next_fixed_scrub = s.scrub.enabled && discipline == ScrubDiscipline::deterministic_period
                                ? s.scrub.period_hours
                                : std::numeric_limits<double>::infinity();
  const double per_symbol = seu_per_symbol + erasure_per_symbol;
  const double erasure_share = per_symbol > 0.0 ? erasure_per_symbol / per_symbol : 0.0;

  auto failing = [&] { return erased + 2 * errored > parity; };
  auto on_event = [&](std::size_t symbol, bool is_erasure) {
    std::uint8_t& st = status[symbol];
    if (is_erasure) {
      if (st == kErased) return false;   // already located
      if (st == kError) --errored;       // erasure subsumes the random error
      st = kErased;
      ++erased;
    } else {
      if (st != kClean) return false;    // repeat hits on a symbol are ignored
      st = kError;
      ++errored;
    }
    return failing();
  };
  auto on_scrub = [&] {
    if (failing()) return true;  // unreachable under per-event checking; kept for the contract
    for (auto& st : status) {
      if (st == kError) st = kClean;
    }
    errored = 0;
    return false;
  };

  return run_trial(gen, driver, static_cast<std::size_t>(n), erasure_share, on_event, on_scrub);
}

bool simulate_duplex(const Scenario& s, ScrubDiscipline discipline, std::mt19937_64& gen) {
  const int n = s.code.n;
  const int parity = s.code.parity();
  const double seu_per_symbol = s.code.m * s.rates.lambda_bit_per_day / kHoursPerDay;
  const double erasure_per_symbol = s.rates.lambda_e_symbol_per_day / kHoursPerDay;

  // status[0][p] / status[1][p]: word 1 / word 2, symbol position p.
  std::vector<std::uint8_t> status[2] = {std::vector<std::uint8_t>(n, kClean),
                                         std::vector<std::uint8_t>(n, kClean)};
  // Pair-class tallies; loads derive from them in O(1).
  int both_erased = 0, erased_error = 0, both_error = 0, err_only[2] = {0, 0};

  auto pair_contrib = [&](std::uint8_t a, std::uint8_t b, int delta) {
    if (a == kErased && b == kErased) both_erased += delta;
    else if ((a == kErased && b == kError) || (a == kError && b == kErased)) erased_error += delta;
    else if (a == kError && b == kError) both_error += delta;
    else if (a == kError) err_only[0] += delta;
    else if (b == kError) err_only[1] += delta;
    // single-sided erasures are masked and carry no load
  };
  auto failing = [&] {
    const int shared = both_erased + 2 * (erased_error + both_error);
    return shared + 2 * err_only[0] > parity && shared + 2 * err_only[1] > parity;
  };

  TrialDriver driver;
  driver.horizon = s.horizon_hours;
  driver.event_rate = 2.0 * n * (seu_per_symbol + erasure_per_symbol);
  driver.scrub_exp_rate =
      s.scrub.enabled && discipline == ScrubDiscipline::exponential ? 1.0 / s.scrub.period_hours
                                                                    : 0.0;
  driver.scrub_period = s.scrub.enabled ? s.scrub.period_hours : 0.0;
  driver.next_fixed_scrub = s.scrub.enabled && discipline == ScrubDiscipline::deterministic_period
                                ? s.scrub.period_hours
                                : std::numeric_limits<double>::infinity();
  const double per_symbol = seu_per_symbol + erasure_per_symbol;
  const double erasure_share = per_symbol > 0.0 ? erasure_per_symbol / per_symbol : 0.0;

  auto on_event = [&](std::size_t symbol, bool is_erasure) {
    const std::size_t word = symbol < static_cast<std::size_t>(n) ? 0 : 1;
    const std::size_t pos = word == 0 ? symbol : symbol - n;
    std::uint8_t& st = status[word][pos];
    std::uint8_t next;
    if (is_erasure) {
      if (st == kErased) return false;
      next = kErased;
    } else {
      if (st != kClean) return false;
      next = kError;
    }
    const std::uint8_t other = status[1 - word][pos];
    const std::uint8_t a_old = word == 0 ? st : other, b_old = word == 0 ? other : st;
    const std::uint8_t a_new = word == 0 ? next : other, b_new = word == 0 ? other : next;
    pair_contrib(a_old, b_old, -1);
    pair_contrib(a_new, b_new, +1);
    st = next;
    return failing();
  };
  auto on_scrub = [&] {
    if (failing()) return true;
    for (auto& word : status) {
      for (auto& st : word) {
        if (st == kError) st = kClean;
      }
    }
    erased_error = 0;  // the error half of each pair is corrected; erasure stays (single-sided)
    both_error = err_only[0] = err_only[1] = 0;
    return false;
  };

  return run_trial(gen, driver, static_cast<std::size_t>(2 * n), erasure_share, on_event,
                   on_scrub);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + index * 0x9E3779B97F4A7C15ULL);
}

bool simulate_once(const Scenario& s, ScrubDiscipline discipline, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return s.arrangement == Arrangement::simplex ? simulate_simplex(s, discipline, gen)
                                               : simulate_duplex(s, discipline, gen);
}

McEstimate estimate(const McConfig& cfg) {
  validate_scenario(cfg.scenario);
  if (cfg.trials < 1) throw ConstraintViolated("trials must be >= 1");

  unsigned workers = cfg.workers;
  if (workers == 0) {
    workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));

  std::vector<std::uint64_t> failures_per_worker(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::uint64_t local = 0;
      for (std::uint64_t i = w; i < cfg.trials; i += workers) {
        if (simulate_once(cfg.scenario, cfg.discipline, trial_seed(cfg.seed, i))) ++local;
      }
      failures_per_worker[w] = local;
    });
  }
  for (auto& th : pool) th.join();

  std::uint64_t failures = 0;
  for (std::uint64_t f : failures_per_worker) failures += f;

  McEstimate est;
  est.trials = cfg.trials;
  est.failures = failures;
  est.p_fail_hat = static_cast<double>(failures) / static_cast<double>(cfg.trials);
  if (failures != 0 && failures != cfg.trials) {
    const double z = 1.959963984540054;
    const double nn = static_cast<double>(cfg.trials);
    const double phat = est.p_fail_hat;
    est.ci_halfwidth_95 =
        z * std::sqrt(phat * (1.0 - phat) / nn + z * z / (4.0 * nn * nn)) / (1.0 + z * z / nn);
  }  // all-agree outcomes report a degenerate zero half-width
  est.ber_hat = ber_coefficient(cfg.scenario.code).value() * est.p_fail_hat;
  return est;
}

}  // namespace rsmem
