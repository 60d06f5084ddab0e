#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/kernels.hpp"
#include "zeck/polynomial.hpp"
#include "zeck/sequence.hpp"

namespace zeck {

/// H_{n,k}: the (k+1) x (k+1) matrix with entries H_{n+i+j}.
class HankelMatrix {
 public:
  /// Throws std::out_of_range when n < -(t-1).
  HankelMatrix(const RecurrenceSequence& seq, Index n, std::size_t k);

  Index start() const { return start_; }
  std::size_t size() const { return size_; }
  const BigInt& entry(std::size_t i, std::size_t j) const { return window_.at(i + j); }
  std::vector<std::vector<BigInt>> rows() const;
  BigInt determinant() const;

 private:
  Index start_;
  std::size_t size_;
  std::vector<BigInt> window_;  // H_n .. H_{n+2k}
};

/// Fraction-free Gaussian elimination with row swaps.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

BigInt hankel_det(const RecurrenceSequence& seq, Index n, std::size_t k);

/// Lowest-degree monic integer polynomial x^k - d_1 x^{k-1} - ... - d_k
/// whose recurrence a_m = d_1 a_{m-1} + ... + d_k a_{m-k} holds across all
/// of `terms`. Degrees are tried in ascending order; the k x k system from
/// the first 2k terms is solved exactly and the candidate checked against
/// every term. Throws std::domain_error when nothing of degree <= max_degree
/// fits (including when 2k exceeds the number of terms).
IntPolynomial minimal_poly(std::span<const BigInt> terms, std::size_t max_degree);

/// Same, over H_start .. H_{start + witness_terms - 1}. `start` defaults to
/// the first index -(t-1).
IntPolynomial minimal_poly(const RecurrenceSequence& seq, std::size_t max_degree,
                           std::size_t witness_terms, std::optional<Index> start = std::nullopt);

struct DivisibilityReport {
  int r_max = 0;
  std::vector<DivisibilityHit> hits;
  /// (t + 1, t) for the all-ones signature of depth t, if within r_max.
  std::optional<DivisibilityHit> expected;
  /// sigma = (1): x - 1 divides every g(r, s).
  bool expects_every_pair = false;
  bool matches_expectation = false;
};

DivisibilityReport char_divides_g_scan(const Signature& sig, int r_max);
DivisibilityReport char_divides_g_scan_serial(const Signature& sig, int r_max);

/// x^r - 2x^s + 1, x^{r-1} - 2x^{s-1} + 1 and x^{r-s} - 2 have no common root
/// in (1, 3], checked numerically: every pair of root brackets found by
/// real_roots_in is at least `separation` apart.
bool distinct_positive_roots(int r, int s, long double separation = 1e-9L);

}  // namespace zeck
