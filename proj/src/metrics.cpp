#include "rsmem/metrics.hpp"

namespace rsmem {

long decode_latency_cycles(const CodeParams& c) {
  return 3L * c.n + 10L * (c.n - c.k);
}

double storage_overhead(Arrangement arrangement, const CodeParams& c) {
  const long redundant =
      arrangement == Arrangement::simplex ? c.n - c.k : 2L * c.n - c.k;
  return static_cast<double>(redundant) / static_cast<double>(c.k);
}

}  // namespace rsmem
