#pragma once

#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/signature.hpp"

namespace zeck {

/// Terms H_n of a recurrence under the ideal initial conditions
/// H_{-(t-1)} = ... = H_{-1} = 0, H_0 = 1.
///
/// The memo table grows on demand and is guarded by a mutex, so term() can
/// be called concurrently.
class RecurrenceSequence {
 public:
  explicit RecurrenceSequence(Signature sig);
  RecurrenceSequence(const RecurrenceSequence& other);
  RecurrenceSequence& operator=(const RecurrenceSequence& other);

  const Signature& signature() const { return sig_; }
  Index first_index() const { return -static_cast<Index>(sig_.depth()) + 1; }

  /// H_n. Throws std::out_of_range for n < -(t-1).
  BigInt term(Index n) const;

  /// H_0 .. H_hi (inclusive), in one locked pass.
  std::vector<BigInt> terms(Index hi) const;

  /// Every (m, H_m) with m >= 0 and H_m <= bound, ascending. Throws
  /// std::domain_error for sigma = (1), whose terms never exceed 1.
  std::vector<std::pair<Index, BigInt>> terms_up_to(const BigInt& bound) const;

  /// Largest m >= 0 with H_m <= value, or -1 when value < 1.
  Index largest_index_at_most(const BigInt& value) const;

 private:
  void extend_locked(Index n) const;

  Signature sig_;
  mutable std::mutex mu_;
  mutable std::vector<BigInt> memo_;  // memo_[n + t - 1] = H_n
};

struct GrowthParams {
  long double beta = 0;
  long double beta_lo = 0;
  long double beta_hi = 0;
  /// floor(log_beta 2).
  int ell1 = 0;
  /// floor(log_beta (2 - beta^ell1)^{-1}); absent when beta^ell1 == 2.
  std::optional<int> ell2;
  /// Set when the logarithm lies within the tolerance window of an integer.
  /// The reported value is then the nearest integer.
  bool ell1_ambiguous = false;
  bool ell2_ambiguous = false;
};

/// Dominant root and the two-summand offsets. Throws std::domain_error for
/// sigma = (1), where beta = 1.
GrowthParams growth_params(const RecurrenceSequence& seq, long double tol = 1e-12L);

}  // namespace zeck
