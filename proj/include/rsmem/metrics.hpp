#pragma once

#include "rsmem/types.hpp"

namespace rsmem {

/// Decoding time in clock cycles, 3n + 10(n-k), for a block-access decoder.
long decode_latency_cycles(const CodeParams& c);

/// Redundant symbols stored per data symbol: (n-k)/k for a simplex module,
/// (2n-k)/k for a duplicated pair.
double storage_overhead(Arrangement arrangement, const CodeParams& c);

}  // namespace rsmem
