#include "rsmem/model.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rsmem/errors.hpp"

namespace rsmem {

CodeParams validate_code(int n, int k, int m) {
  if (n < 1 || k < 1 || m < 1) {
    throw ConstraintViolated("code parameters must all be >= 1");
  }
  if (k >= n) {
    throw ConstraintViolated("need k < n, got k=" + std::to_string(k) +
                             " n=" + std::to_string(n));
  }
  // 2^m - 1 without overflow; anything above 30 bits per symbol is beyond
  // any practical n.
  const long long symbol_cap =
      m >= 31 ? std::numeric_limits<int>::max() : ((1LL << m) - 1);
  if (n > symbol_cap) {
    throw ConstraintViolated("n=" + std::to_string(n) + " exceeds 2^m-1=" +
                             std::to_string(symbol_cap) + " for m=" + std::to_string(m));
  }
  return CodeParams{n, k, m, (n - k) / 2};
}

void validate_rates(const FaultRates& rates) {
  const bool ok = std::isfinite(rates.lambda_bit_per_day) &&
                  std::isfinite(rates.lambda_e_symbol_per_day) &&
                  rates.lambda_bit_per_day >= 0.0 && rates.lambda_e_symbol_per_day >= 0.0;
  if (!ok) throw ConstraintViolated("fault rates must be finite and >= 0");
}

void validate_scrub(const ScrubConfig& scrub) {
  if (scrub.enabled && !(scrub.period_hours > 0.0 && std::isfinite(scrub.period_hours))) {
    throw ConstraintViolated("scrub period must be finite and > 0 when scrubbing is enabled");
  }
}

void validate_scenario(const Scenario& s) {
  validate_rates(s.rates);
  validate_scrub(s.scrub);
  if (s.code.t != (s.code.n - s.code.k) / 2) {
    throw ConstraintViolated("code params not produced by validate_code");
  }
  if (!(s.horizon_hours > 0.0) || !std::isfinite(s.horizon_hours)) {
    throw ConstraintViolated("horizon must be finite and > 0");
  }
  if (s.time_grid.empty()) throw ConstraintViolated("time grid is empty");
  double prev = -1.0;
  for (double t : s.time_grid) {
    if (!std::isfinite(t) || t < 0.0) throw ConstraintViolated("grid instants must be finite and >= 0");
    if (t <= prev) throw ConstraintViolated("time grid must be strictly increasing");
    if (t > s.horizon_hours) throw ConstraintViolated("grid instant beyond horizon");
    prev = t;
  }
}

bool simplex_is_fail(const SimplexState& s, const CodeParams& c) {
  return s.erasures + 2 * s.random_errors > c.parity();
}

int duplex_word_load(const DuplexState& d, int word) {
  const int own_errors = word == 1 ? d.errors_w1 : d.errors_w2;
  return d.both_erased + 2 * (d.erased_error + d.both_error + own_errors);
}

bool duplex_is_fail(const DuplexState& d, const CodeParams& c) {
  return duplex_word_load(d, 1) > c.parity() && duplex_word_load(d, 2) > c.parity();
}

std::optional<SimplexState> simplex_scrub_target(const SimplexState& s, const CodeParams& c) {
  if (simplex_is_fail(s, c)) return std::nullopt;
  return SimplexState{s.erasures, 0};
}

std::optional<DuplexState> duplex_scrub_target(const DuplexState& d, const CodeParams& c) {
  if (duplex_is_fail(d, c)) return std::nullopt;
  return DuplexState{d.both_erased, d.single_erased + d.erased_error, 0, 0, 0, 0};
}

Ratio ber_coefficient(const CodeParams& c) {
  std::int64_t num = static_cast<std::int64_t>(c.m) * c.parity();
  std::int64_t den = c.k;
  const std::int64_t g = std::gcd(num, den);
  return Ratio{num / g, den / g};
}

}  // namespace rsmem
