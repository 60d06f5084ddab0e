#pragma once

// Data-parallel inner loops. Each kernel has a serial reference in
// zeck::serial and an OpenMP version in zeck::parallel with identical
// results; the tests compare them and bench/ times them.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/polynomial.hpp"
#include "zeck/representation.hpp"

namespace zeck {

struct DivisibilityHit {
  int r = 0;
  int s = 0;
  friend bool operator==(const DivisibilityHit&, const DivisibilityHit&) = default;
};

namespace serial {

/// gzd_of(v) for every v, in input order.
std::vector<Representation> gzd_batch(const SequencePtr& seq, std::span<const BigInt> values);

/// Pairs 1 <= s < r <= r_max with f | x^r - 2x^s + 1, ordered by (r, s).
std::vector<DivisibilityHit> g_divisibility_hits(const IntPolynomial& f, int r_max);

}  // namespace serial

namespace parallel {

std::vector<Representation> gzd_batch(const SequencePtr& seq, std::span<const BigInt> values);

std::vector<DivisibilityHit> g_divisibility_hits(const IntPolynomial& f, int r_max);

/// Worker count OpenMP will use (1 when built without OpenMP).
int max_threads();

}  // namespace parallel

/// 0, 1, ..., n as big integers.
std::vector<BigInt> iota_values(std::uint64_t n);

}  // namespace zeck
