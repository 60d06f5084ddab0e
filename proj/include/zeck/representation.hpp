#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/sequence.hpp"
#include "zeck/signature.hpp"

namespace zeck {

using SequencePtr = std::shared_ptr<const RecurrenceSequence>;

inline SequencePtr make_sequence(Signature sig) {
  return std::make_shared<const RecurrenceSequence>(std::move(sig));
}

class RepresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One entry of a representation: a non-negative integer or the symbolic
/// infinity that fills the t-1 places below index 0. Infinity absorbs any
/// finite addition or subtraction and compares greater than every integer.
class Place {
 public:
  Place(BigInt v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static Place infinity() { return Place(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on infinity.
  const BigInt& value() const;

  /// -1, 0 or 1 as this place is below, equal to or above `c`.
  int compare(std::int64_t c) const;

 private:
  Place() = default;
  std::optional<BigInt> value_;
};

/// Coefficient string [r_s, ..., r_0] over the terms of a recurrence
/// sequence, with implicit infinity entries at indices -1 .. -(t-1).
///
/// Values are immutable. Leading zeros are dropped on construction; the zero
/// representation is the single digit [0].
class Representation {
 public:
  /// Digits most significant first. Throws RepresentationError on a negative
  /// digit or an empty list.
  Representation(SequencePtr seq, const std::vector<BigInt>& msd_first);

  static Representation from_lsd(SequencePtr seq, std::vector<BigInt> lsd_first);
  /// Single nonzero digit `coeff` at `index`.
  static Representation monomial(SequencePtr seq, const BigInt& coeff, Index index);

  const SequencePtr& sequence() const { return seq_; }
  const Signature& signature() const { return seq_->signature(); }

  Index top_index() const { return static_cast<Index>(lsd_.size()) - 1; }
  /// Digit at index i >= 0 (zero above the top).
  BigInt digit(Index i) const;
  /// Entry at any index >= -(t-1); infinity below 0.
  Place at(Index i) const;

  const std::vector<BigInt>& lsd() const { return lsd_; }
  std::vector<BigInt> msd_first() const;

  /// sum of r_i H_i over i >= 0.
  BigInt value() const;
  /// sum of r_i over i >= 0.
  BigInt summand_count() const;

  /// "[3,1,2]", most significant first.
  std::string to_string() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.signature() == b.signature() && a.lsd_ == b.lsd_;
  }

 private:
  Representation(SequencePtr seq, std::vector<BigInt> lsd, int);
  void normalize();

  SequencePtr seq_;
  std::vector<BigInt> lsd_;
};

/// Parses "[a,b,c]" (brackets optional) into most-significant-first digits.
/// Negative entries are accepted here; Representation rejects them.
std::vector<BigInt> parse_digits(std::string_view text);

Representation parse_representation(SequencePtr seq, std::string_view text);

/// Change in summand count caused by borrowing from index i (the negation
/// for a carry to i): -1 + c_1 + ... + c_min(i, t).
std::int64_t borrow_delta(const Signature& sig, Index i);

/// Replace one H_i by c_1 H_{i-1} + ... + c_t H_{i-t}. Requires i >= 1 and
/// r_i >= 1; contributions landing on infinity places are absorbed.
Representation borrow(const Representation& r, Index i);

/// True iff r_{j-i} >= c_i for 1 <= i <= t (infinity places always qualify).
bool able_to_carry(const Representation& r, Index j);

/// Inverse of borrow. Throws RepresentationError naming the first offset i
/// with r_{j-i} < c_i.
Representation carry(const Representation& r, Index j);

struct LegalityReport {
  /// Minimum legal index: smallest s such that the digits at indices >= s
  /// split into allowable blocks.
  Index mli = 0;
  /// Semi-legal index, violation_index + 1 (0 for a gzd).
  Index sli = 0;
  /// May be negative when the violation lands on an infinity place.
  std::optional<Index> violation_index;
  /// c_1 .. c_{j-1} matched before the violation.
  Block violation_prefix;
  /// The violation block matched c_1..c_t exactly rather than exceeding.
  bool violation_by_equality = false;
  /// Carry obstruction index: first s - l with r_{s-l} < c_l.
  std::optional<Index> coi;
  /// Rightmost excess index: nearest index left of the c.o.i. whose entry
  /// exceeds its signature position.
  std::optional<Index> rei;

  bool is_gzd() const { return mli == 0; }
};

LegalityReport legality(const Representation& r);

struct BlockDecomposition {
  std::vector<Block> blocks;
  /// Digits at indices mli-1 .. 0, most significant first.
  std::vector<BigInt> suffix;
  Index mli = 0;
};

/// Greedy left-to-right split into allowable blocks, stopping at the m.l.i.
BlockDecomposition block_decomposition(const Representation& r);

/// Representation whose entries may be negative. Only the negative-entry
/// repair and the cutting replays produce these.
class SignedRepresentation {
 public:
  SignedRepresentation(SequencePtr seq, const std::vector<BigInt>& msd_first);
  explicit SignedRepresentation(const Representation& r);

  const SequencePtr& sequence() const { return seq_; }
  const Signature& signature() const { return seq_->signature(); }
  Index top_index() const { return static_cast<Index>(lsd_.size()) - 1; }
  BigInt digit(Index i) const;
  const std::vector<BigInt>& lsd() const { return lsd_; }

  BigInt value() const;
  BigInt summand_count() const;
  bool has_negative() const;
  std::string to_string() const;

  /// Unchecked borrow/carry at i >= 1; entries may go negative.
  SignedRepresentation borrow(Index i) const;
  SignedRepresentation carry(Index i) const;

  /// Throws RepresentationError if any entry is negative.
  Representation to_representation() const;

 private:
  SignedRepresentation(SequencePtr seq, std::vector<BigInt> lsd, int);
  void normalize();

  SequencePtr seq_;
  std::vector<BigInt> lsd_;
};

}  // namespace zeck
