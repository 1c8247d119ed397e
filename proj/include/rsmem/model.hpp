#pragma once

#include <cstdint>
#include <optional>

#include "rsmem/types.hpp"

namespace rsmem {

/// A word is unreadable when erasures plus twice the random errors exceed
/// the parity budget.
bool simplex_is_fail(const SimplexState& s, const CodeParams& c);

/// The pair is unreadable when neither word can be decoded. Single-sided
/// erasures are masked by the arbiter and do not count; an erased/errored
/// pair and a doubly-errored pair burden both words like a random error.
bool duplex_is_fail(const DuplexState& d, const CodeParams& c);

/// Word-level load for one side of the pair: erasures that survive masking
/// plus twice the random errors seen by that word.
int duplex_word_load(const DuplexState& d, int word);  // word is 1 or 2

/// Scrubbing rewrites corrected data: random errors are cleared, located
/// permanent faults stay. Returns nullopt when the state is already
/// unreadable (the scrub cannot reconstruct the word).
std::optional<SimplexState> simplex_scrub_target(const SimplexState& s, const CodeParams& c);

/// Duplex scrub: the random error inside each erased/errored pair is
/// corrected, leaving a single-sided erasure; all pure random errors clear.
std::optional<DuplexState> duplex_scrub_target(const DuplexState& d, const CodeParams& c);

/// Exact rational, kept unreduced-free of floating error. value() is the
/// double used verbatim wherever the coefficient multiplies a probability.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// BER scale factor m*(n-k)/k. May exceed 1 for high-redundancy codes; it is
/// an error-magnitude proxy, not a probability, and is never clamped.
Ratio ber_coefficient(const CodeParams& c);

}  // namespace rsmem
