#include "rsmem/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsmem/errors.hpp"

namespace rsmem {

namespace {

// Keep each uniformization step's Poisson series under ~1e6 terms.
constexpr double kMaxPoissonMeanPerStep = 9.0e5;

// True Poisson pmf values for j = 0..right, computed outward from the mode
// so large means neither overflow nor underflow near the mass. `right` is
// the smallest index with cumulative mass >= 1 - tail_tol.
std::vector<double> poisson_weights(double mean, double tail_tol) {
  const std::size_t mode = static_cast<std::size_t>(mean);
  const std::size_t hard_cap =
      mode + 200 + static_cast<std::size_t>(20.0 * std::sqrt(mean + 4.0));

  std::vector<double> w(mode + 1, 0.0);
  w[mode] = std::exp(-mean + static_cast<double>(mode) * std::log(mean) -
                     std::lgamma(static_cast<double>(mode) + 1.0));
  for (std::size_t j = mode; j > 0; --j) w[j - 1] = w[j] * static_cast<double>(j) / mean;

  double cumulative = 0.0;
  for (double x : w) cumulative += x;
  while (cumulative < 1.0 - tail_tol) {
    const std::size_t j = w.size();
    if (j > hard_cap) {
      throw NumericalFailure("Poisson window failed to capture 1-tol mass");
    }
    w.push_back(w.back() * mean / static_cast<double>(j));
    cumulative += w.back();
    // Past the mode the tail decays monotonically; once a term is below one
    // ulp of the accumulated mass the captured error is at double
    // resolution and tighter tolerances cannot be realized.
    if (j > mode && w.back() < cumulative * 0x1.0p-60) break;
  }
  return w;
}

}  // namespace

Distribution transient(const Ctmc& chain, double t_hours, double tol) {
  if (!(t_hours >= 0.0) || !std::isfinite(t_hours)) {
    throw ConstraintViolated("time must be finite and >= 0");
  }
  if (!(tol > 0.0) || tol > 1e-6) {
    throw ConstraintViolated("tol must be in (0, 1e-6]");
  }

  const std::size_t n = chain.state_count();
  Distribution result;
  result.time_hours = t_hours;
  result.probabilities.assign(n, 0.0);
  result.probabilities[chain.initial_index] = 1.0;

  double uniform_rate = 0.0;
  for (double x : chain.exit_rate) {
    if (!std::isfinite(x)) throw NumericalFailure("non-finite exit rate in generator");
    uniform_rate = std::max(uniform_rate, x);
  }
  if (t_hours == 0.0 || uniform_rate == 0.0) return result;  // chain never moves

  const double total_mean = uniform_rate * t_hours;
  const std::size_t steps =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(total_mean / kMaxPoissonMeanPerStep)));
  const double step_mean = total_mean / static_cast<double>(steps);
  const double step_tol = tol / static_cast<double>(steps);

  // One step of the uniformized DTMC: y = x * (I + Q/uniform_rate).
  std::vector<double> scratch(n, 0.0);
  auto dtmc_step = [&](std::vector<double>& x, std::vector<double>& y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t row = 0; row < n; ++row) {
      const double mass = x[row];
      if (mass == 0.0) continue;
      y[row] += mass * (1.0 - chain.exit_rate[row] / uniform_rate);
      for (std::size_t idx = chain.row_ptr[row]; idx < chain.row_ptr[row + 1]; ++idx) {
        y[chain.col[idx]] += mass * chain.rate[idx] / uniform_rate;
      }
    }
  };

  std::vector<double> current = result.probabilities;
  std::vector<double> accumulated(n, 0.0);
  for (std::size_t step = 0; step < steps; ++step) {
    const std::vector<double> weights = poisson_weights(step_mean, step_tol);
    std::fill(accumulated.begin(), accumulated.end(), 0.0);
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (j > 0) {
        dtmc_step(current, scratch);
        current.swap(scratch);
      }
      if (weights[j] > 0.0) {
        for (std::size_t i = 0; i < n; ++i) accumulated[i] += weights[j] * current[i];
      }
    }
    current = accumulated;
  }

  for (double& p : current) p = std::clamp(p, 0.0, 1.0);
  result.probabilities = std::move(current);
  return result;
}

double fail_probability(const Ctmc& chain, double t_hours, double tol) {
  return transient(chain, t_hours, tol).probabilities[chain.fail_index];
}

BerSeries ber_curve(const Scenario& s, double tol) {
  const Ctmc chain = build_ctmc(s);
  BerSeries series;
  series.coefficient = ber_coefficient(s.code);
  const double coefficient = series.coefficient.value();
  series.points.reserve(s.time_grid.size());
  for (double t : s.time_grid) {
    const double p = fail_probability(chain, t, tol);
    series.points.push_back({t, p, coefficient * p});
  }
  return series;
}

}  // namespace rsmem
