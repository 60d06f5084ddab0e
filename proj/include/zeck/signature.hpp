#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zeck {

class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficients (c_1, ..., c_t) of a positive linear recurrence
/// H_n = c_1 H_{n-1} + ... + c_t H_{n-t}.
///
/// Construction validates c_1 >= 1, c_t >= 1, all entries >= 0 and
/// t <= kMaxDepth. Immutable afterwards.
class Signature {
 public:
  static constexpr std::size_t kMaxDepth = 64;

  explicit Signature(std::vector<std::int64_t> coeffs);

  /// 1-based access, matching the usual c_i notation.
  std::int64_t c(std::size_t i) const { return coeffs_.at(i - 1); }
  std::size_t depth() const { return coeffs_.size(); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// c_1 + ... + c_t.
  std::int64_t total() const;
  /// c_1 + ... + c_k for k <= t; k is clamped to t.
  std::int64_t prefix_sum(std::size_t k) const;

  /// Comma-separated rendering, e.g. "5,3,1".
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

Signature parse_signature(std::string_view text);

bool is_weakly_decreasing(const Signature& sig);

bool is_all_ones(const Signature& sig);

using Block = std::vector<std::int64_t>;

/// Every [b_1, ..., b_k] with k <= t, b_i = c_i for i < k and 0 <= b_k < c_k,
/// ordered by length then by last entry.
std::vector<Block> allowable_blocks(const Signature& sig);

bool is_allowable_block(const Signature& sig, const Block& block);

/// First point of increase in a signature that is not weakly decreasing.
/// `p` is the smallest index with c_p < c_{p+1}; `k` the largest index below
/// p with c_k > c_p (0 when none exists); `ell = p - k`.
struct IncreaseProfile {
  std::size_t p = 0;
  std::size_t k = 0;
  std::size_t ell = 0;
};

/// Throws SignatureError when the signature is weakly decreasing.
IncreaseProfile increase_profile(const Signature& sig);

/// All valid signatures with depth 1..max_depth and entries in 0..max_coeff,
/// in lexicographic order by (depth, coefficients).
std::vector<Signature> enumerate_signatures(std::size_t max_depth,
                                            std::int64_t max_coeff);

}  // namespace zeck
