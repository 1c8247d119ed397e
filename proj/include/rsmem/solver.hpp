#pragma once

#include <vector>

#include "rsmem/chain.hpp"
#include "rsmem/model.hpp"
#include "rsmem/types.hpp"

namespace rsmem {

/// State-probability vector at one instant, aligned with the chain's state
/// indices. Entries are clamped to [0,1] on output; the truncation budget
/// keeps the sum within tol of 1.
struct Distribution {
  std::vector<double> probabilities;
  double time_hours = 0.0;
};

/// Transient solution from the Good state via uniformization with
/// Poisson-tail truncation; total L1 error <= tol. Deterministic for fixed
/// inputs. Long horizons are split into sub-intervals so the Poisson series
/// never needs more than ~1e6 terms per step.
Distribution transient(const Ctmc& chain, double t_hours, double tol = 1e-10);

/// Probability of having been absorbed in Fail by time t.
double fail_probability(const Ctmc& chain, double t_hours, double tol = 1e-10);

struct BerPoint {
  double time_hours = 0.0;
  double p_fail = 0.0;
  double ber = 0.0;  // always coefficient.value() * p_fail, same representation
};

struct BerSeries {
  Ratio coefficient;
  std::vector<BerPoint> points;
};

/// Builds the chain once and evaluates every grid instant independently
/// from t=0, so each point carries the full tol guarantee.
BerSeries ber_curve(const Scenario& s, double tol = 1e-10);

}  // namespace rsmem
