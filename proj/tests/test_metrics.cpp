#include <doctest.h>

#include <random>

#include "rsmem/metrics.hpp"
#include "rsmem/model.hpp"

using namespace rsmem;

TEST_CASE("decode latency in cycles") {
  CHECK(decode_latency_cycles(validate_code(36, 16, 8)) == 308);  // 108 + 200
  CHECK(decode_latency_cycles(validate_code(18, 16, 8)) == 74);   // 54 + 20
  // degenerate zero-parity form still evaluates to 3n
  CHECK(decode_latency_cycles(CodeParams{20, 20, 8, 0}) == 60);
}

TEST_CASE("latency ratio of the wide code exceeds four") {
  const double wide = static_cast<double>(decode_latency_cycles(validate_code(36, 16, 8)));
  const double narrow = static_cast<double>(decode_latency_cycles(validate_code(18, 16, 8)));
  CHECK(wide / narrow > 4.0);
}

TEST_CASE("storage overhead per arrangement") {
  CHECK(storage_overhead(Arrangement::duplex, validate_code(18, 16, 8)) == 1.25);
  CHECK(storage_overhead(Arrangement::simplex, validate_code(36, 16, 8)) == 1.25);
  CHECK(storage_overhead(Arrangement::simplex, validate_code(18, 16, 8)) == 0.125);
}

TEST_CASE("duplexing n symbols costs the same as doubling the codeword") {
  std::mt19937 gen(5);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 120)(gen);
    const int k = std::uniform_int_distribution<int>(1, n - 1)(gen);
    const CodeParams narrow = validate_code(n, k, 8);
    const CodeParams doubled = validate_code(2 * n, k, 9);  // widen m so 2n fits
    CHECK(storage_overhead(Arrangement::duplex, narrow) ==
          storage_overhead(Arrangement::simplex, doubled));
  }
}
