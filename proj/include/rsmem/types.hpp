#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace rsmem {

/// An RS(n,k) code over m-bit symbols. `t` is the random-error correction
/// capability derived from the parity budget.
struct CodeParams {
  int n = 0;  // symbols per codeword
  int k = 0;  // data symbols per codeword
  int m = 0;  // bits per symbol
  int t = 0;  // max correctable random errors = floor((n-k)/2)

  int parity() const { return n - k; }
};

/// Validates raw (n, k, m) and derives t. Throws ConstraintViolated.
CodeParams validate_code(int n, int k, int m);

/// Event rates, both per day as conventionally quoted for SEU exposure.
/// Converted to per-hour at the chain-building boundary.
struct FaultRates {
  double lambda_bit_per_day = 0.0;       // SEU rate per bit
  double lambda_e_symbol_per_day = 0.0;  // erasure (located permanent fault) rate per symbol
};

/// Throws ConstraintViolated unless both rates are finite and >= 0.
void validate_rates(const FaultRates& rates);

struct ScrubConfig {
  bool enabled = false;
  double period_hours = 0.0;  // > 0 when enabled

  static ScrubConfig disabled() { return {}; }
  static ScrubConfig every(double hours) { return {true, hours}; }
};

void validate_scrub(const ScrubConfig& scrub);

enum class Arrangement { simplex, duplex };

/// How duplex erasure rates on pairs with two eligible symbols are counted.
/// `paper_literal` keeps the single-symbol rates as conventionally printed;
/// `physical` counts both symbols of the pair (matches the per-symbol
/// Monte Carlo simulator).
enum class RateMode { paper_literal, physical };

/// Simplex word damage: counts of erased and randomly-errored symbols.
struct SimplexState {
  int erasures = 0;       // symbols whose location is known bad
  int random_errors = 0;  // symbols hit by an SEU, location unknown

  auto operator<=>(const SimplexState&) const = default;
};

/// Duplex word-pair damage, classified per symbol position across the two
/// replicated words.
struct DuplexState {
  int both_erased = 0;    // erased in both words at the same position
  int single_erased = 0;  // erased in one word, the homologous symbol clean
  int erased_error = 0;   // erased in one word, random error in the other
  int errors_w1 = 0;      // random error in word 1 only
  int errors_w2 = 0;      // random error in word 2 only
  int both_error = 0;     // random errors in both words at the same position

  int affected() const {
    return both_erased + single_erased + erased_error + errors_w1 + errors_w2 + both_error;
  }

  auto operator<=>(const DuplexState&) const = default;
};

/// One evaluation request: system arrangement, code, rates, scrubbing,
/// storage horizon and the instants at which BER is reported.
struct Scenario {
  Arrangement arrangement = Arrangement::simplex;
  CodeParams code;
  FaultRates rates;
  ScrubConfig scrub;
  double horizon_hours = 0.0;
  std::vector<double> time_grid;  // hours, strictly increasing, within [0, horizon]
  RateMode rate_mode = RateMode::physical;
};

/// Throws ConstraintViolated on any invariant breach.
void validate_scenario(const Scenario& s);

}  // namespace rsmem
