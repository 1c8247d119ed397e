#include <doctest.h>

#include <cmath>
#include <numeric>

#include "rsmem/chain.hpp"
#include "rsmem/errors.hpp"
#include "rsmem/solver.hpp"
#include "support/oracles.hpp"

using namespace rsmem;

namespace {

const CodeParams kRs18 = validate_code(18, 16, 8);
const CodeParams kRs6 = validate_code(6, 4, 3);

Ctmc birth_chain(double rate_per_hour) {
  return ctmc_from_transitions(2, 1, 0, {{0, 1, rate_per_hour, TransitionKind::to_fail}});
}

Scenario scenario_of(Arrangement arrangement, CodeParams code, FaultRates rates,
                     ScrubConfig scrub, std::vector<double> grid, double horizon = 48.0) {
  Scenario s;
  s.arrangement = arrangement;
  s.code = code;
  s.rates = rates;
  s.scrub = scrub;
  s.horizon_hours = horizon;
  s.time_grid = std::move(grid);
  return s;
}

}  // namespace

TEST_CASE("t = 0 returns a point mass on the good state") {
  const Ctmc chain = birth_chain(1.0);
  const Distribution d = transient(chain, 0.0);
  CHECK(d.probabilities[0] == 1.0);
  CHECK(d.probabilities[1] == 0.0);
}

TEST_CASE("two-state birth chain matches the analytic solution") {
  CHECK(fail_probability(birth_chain(1.0), 1.0, 1e-12) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));
  CHECK(fail_probability(birth_chain(0.5), 2.0, 1e-12) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));
  CHECK(fail_probability(birth_chain(1.0), 0.0) == 0.0);
}

TEST_CASE("zero generator returns the initial distribution at any time") {
  const Ctmc chain = build_ctmc(scenario_of(Arrangement::simplex, kRs18, FaultRates{0.0, 0.0},
                                            ScrubConfig::disabled(), {48.0}));
  const Distribution d = transient(chain, 1000.0);
  CHECK(d.probabilities[chain.initial_index] == 1.0);
  CHECK(fail_probability(chain, 1000.0) == 0.0);
}

TEST_CASE("argument validation") {
  const Ctmc chain = birth_chain(1.0);
  CHECK_THROWS_AS(transient(chain, -1.0), ConstraintViolated);
  CHECK_THROWS_AS(transient(chain, 1.0, 0.0), ConstraintViolated);
  CHECK_THROWS_AS(transient(chain, 1.0, 1e-3), ConstraintViolated);
}

TEST_CASE("uniformization agrees with the dense matrix exponential") {
  const FaultRates rates{0.24, 0.12};
  SUBCASE("duplex with scrubbing") {
    const Ctmc chain = build_ctmc(scenario_of(Arrangement::duplex, kRs6, rates,
                                              ScrubConfig::every(2.0), {10.0}));
    const auto dense = testing::dense_transient(chain, 10.0);
    const Distribution uni = transient(chain, 10.0, 1e-10);
    for (std::size_t i = 0; i < dense.size(); ++i) {
      CHECK(std::abs(uni.probabilities[i] - dense[i]) < 1e-8);
    }
  }
  SUBCASE("simplex without scrubbing") {
    const Ctmc chain = build_ctmc(scenario_of(Arrangement::simplex, kRs18, rates,
                                              ScrubConfig::disabled(), {10.0}));
    const auto dense = testing::dense_transient(chain, 7.5);
    const Distribution uni = transient(chain, 7.5, 1e-10);
    for (std::size_t i = 0; i < dense.size(); ++i) {
      CHECK(std::abs(uni.probabilities[i] - dense[i]) < 1e-8);
    }
  }
}

TEST_CASE("distributions conserve probability and stay inside [0,1]") {
  const FaultRates rates{0.4, 0.15};
  const Ctmc chain = build_ctmc(scenario_of(Arrangement::duplex, kRs6, rates,
                                            ScrubConfig::every(1.0), {48.0}));
  for (double t : {0.1, 1.0, 5.0, 20.0, 48.0}) {
    const Distribution d = transient(chain, t, 1e-10);
    double sum = 0.0;
    for (double p : d.probabilities) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("failure probability is non-decreasing in time") {
  const FaultRates rates{0.3, 0.1};
  const Ctmc chain = build_ctmc(scenario_of(Arrangement::simplex, kRs6, rates,
                                            ScrubConfig::every(4.0), {48.0}));
  double previous = 0.0;
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 48.0}) {
    const double p = fail_probability(chain, t, 1e-12);
    CHECK(p >= previous - 1e-12);
    previous = p;
  }
}

TEST_CASE("failure probability grows with either fault rate") {
  auto p_at = [](double lambda, double lambda_e) {
    const Ctmc chain = build_ctmc(scenario_of(Arrangement::duplex, kRs6,
                                              FaultRates{lambda, lambda_e},
                                              ScrubConfig::disabled(), {24.0}));
    return fail_probability(chain, 24.0, 1e-12);
  };
  double previous = 0.0;
  for (double lambda : {0.01, 0.02, 0.05, 0.1, 0.3}) {
    const double p = p_at(lambda, 0.05);
    CHECK(p >= previous);
    previous = p;
  }
  previous = 0.0;
  for (double lambda_e : {0.01, 0.02, 0.05, 0.1, 0.3}) {
    const double p = p_at(0.05, lambda_e);
    CHECK(p >= previous);
    previous = p;
  }
}

TEST_CASE("halving the tolerance moves no probability by more than tol") {
  const FaultRates rates{0.35, 0.2};
  const Ctmc chain = build_ctmc(scenario_of(Arrangement::duplex, kRs6, rates,
                                            ScrubConfig::every(3.0), {48.0}));
  for (double tol : {1e-7, 1e-9, 1e-11}) {
    const Distribution coarse = transient(chain, 30.0, tol);
    const Distribution fine = transient(chain, 30.0, tol / 2.0);
    for (std::size_t i = 0; i < coarse.probabilities.size(); ++i) {
      CHECK(std::abs(coarse.probabilities[i] - fine.probabilities[i]) <= tol);
    }
  }
}

TEST_CASE("interval splitting handles large uniformization constants") {
  // Flip-flop with total rate 5e4/h over 40h: 2e6 Poisson mean forces the
  // solver through multiple sub-intervals; the stationary split is exact.
  const Ctmc chain = ctmc_from_transitions(
      2, 1, 0,
      {{0, 1, 2.5e4, TransitionKind::to_fail}, {1, 0, 2.5e4, TransitionKind::to_fail}});
  const Distribution d = transient(chain, 40.0, 1e-9);
  CHECK(d.probabilities[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(d.probabilities[1] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("ber series applies the exact coefficient row by row") {
  const FaultRates rates{0.2, 0.05};
  SUBCASE("unit coefficient makes the two columns identical") {
    Scenario s = scenario_of(Arrangement::simplex, kRs18, rates, ScrubConfig::disabled(),
                             {1.0, 6.0, 12.0, 24.0, 48.0});
    const BerSeries series = ber_curve(s, 1e-10);
    CHECK(series.coefficient.value() == 1.0);
    for (const BerPoint& p : series.points) {
      CHECK(p.ber == p.p_fail);  // bit-exact
    }
  }
  SUBCASE("general coefficient, bit-exact product") {
    Scenario s = scenario_of(Arrangement::simplex, validate_code(36, 16, 8), rates,
                             ScrubConfig::disabled(), {1.0, 12.0, 48.0});
    const BerSeries series = ber_curve(s, 1e-10);
    CHECK(series.coefficient.value() == 10.0);
    for (const BerPoint& p : series.points) {
      CHECK(p.ber == series.coefficient.value() * p.p_fail);  // same representation
    }
  }
  SUBCASE("zero rates give an all-zero ber column") {
    Scenario s = scenario_of(Arrangement::simplex, kRs18, FaultRates{0.0, 0.0},
                             ScrubConfig::disabled(), {1.0, 24.0, 48.0});
    for (const BerPoint& p : ber_curve(s, 1e-10).points) {
      CHECK(p.p_fail == 0.0);
      CHECK(p.ber == 0.0);
    }
  }
}

TEST_CASE("more frequent scrubbing never hurts") {
  const FaultRates rates{0.3, 0.0};
  double previous = 1.0;
  for (double period : {8.0, 4.0, 2.0, 1.0}) {
    Scenario s = scenario_of(Arrangement::duplex, kRs6, rates, ScrubConfig::every(period),
                             {24.0}, 24.0);
    const double ber = ber_curve(s, 1e-12).points[0].ber;
    CHECK(ber <= previous + 1e-12);
    previous = ber;
  }
}
