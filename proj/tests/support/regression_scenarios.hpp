#pragma once

// Fixed chain <-> Monte Carlo regression set. Rates are inflated so the
// 48h failure probability is far from 0 and 1; the set covers both
// arrangements, with/without scrubbing and with/without erasures.

#include <string>
#include <vector>

#include "rsmem/model.hpp"
#include "rsmem/types.hpp"

namespace rsmem::testing {

struct RegressionScenario {
  std::string name;
  Scenario scenario;
};

inline std::vector<RegressionScenario> regression_scenarios() {
  auto make = [](std::string name, Arrangement arrangement, int n, int k, double lambda,
                 double lambda_e, double scrub_hours) {
    Scenario s;
    s.arrangement = arrangement;
    s.code = validate_code(n, k, 8);
    s.rates = FaultRates{lambda, lambda_e};
    s.scrub = scrub_hours > 0.0 ? ScrubConfig::every(scrub_hours) : ScrubConfig::disabled();
    s.horizon_hours = 48.0;
    s.time_grid = {48.0};
    s.rate_mode = RateMode::physical;
    return RegressionScenario{std::move(name), s};
  };
  return {
      make("simplex18 seu-only no-scrub", Arrangement::simplex, 18, 16, 1e-2, 0.0, 0.0),
      make("simplex18 seu-only scrub-6h", Arrangement::simplex, 18, 16, 1.7e-2, 0.0, 6.0),
      make("simplex18 with-erasures no-scrub", Arrangement::simplex, 18, 16, 5e-3, 5e-3, 0.0),
      make("duplex18 seu-only no-scrub", Arrangement::duplex, 18, 16, 1.7e-2, 0.0, 0.0),
      make("duplex18 seu-only scrub-12h", Arrangement::duplex, 18, 16, 3e-2, 0.0, 12.0),
      make("duplex18 with-erasures no-scrub", Arrangement::duplex, 18, 16, 1e-2, 1e-2, 0.0),
      make("duplex6 with-erasures scrub-12h", Arrangement::duplex, 6, 4, 2e-2, 1e-2, 12.0),
  };
}

}  // namespace rsmem::testing
