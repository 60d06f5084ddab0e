#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/representation.hpp"

namespace zeck {

/// Raised when a property the algorithm guarantees fails at runtime: the
/// step limit is exceeded, a value changes, or the s.l.i. increases.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class StepKind { Borrow, Carry };

const char* to_string(StepKind kind);

struct Step {
  StepKind kind = StepKind::Borrow;
  Index index = 0;
  /// Summand count after the step minus before.
  std::int64_t delta = 0;
  /// Carry issued because the left neighbour block became c_1..c_t.
  bool chained = false;
  /// Legality of the representation the step was applied to.
  Index mli_before = 0;
  Index sli_before = 0;
  std::optional<Index> coi_before;
  std::optional<Index> rei_before;
  std::uint64_t snapshot_hash = 0;
  /// Representation after the step, kept for the first snapshot_depth steps.
  std::optional<Representation> snapshot;
};

struct StepTrace {
  std::vector<Step> steps;
  BigInt initial_summands = 0;
  BigInt final_summands = 0;
};

/// Net change of summands: the sum of per-step deltas.
std::int64_t delta_summands(const StepTrace& trace);

struct TraceOptions {
  std::uint64_t step_limit = 1'000'000;
  /// Full snapshots are stored for this many leading steps; later steps keep
  /// only a hash.
  std::size_t snapshot_depth = 64;
};

struct TracedRun {
  Representation result;
  StepTrace trace;
};

std::uint64_t snapshot_hash(const Representation& r);

/// Moves any representation to the gzd of its value. Each outer iteration
/// either carries to the m.l.i. (then keeps carrying while the left
/// neighbour block equals c_1..c_t) or borrows from the r.e.i. Value is
/// checked after every step and the s.l.i. after every iteration.
TracedRun to_gzd(const Representation& r, const TraceOptions& opts = {});

/// The gzd of n built directly, most significant digit first: at each index
/// take the largest digit that keeps the block structure closable and does
/// not overshoot the remainder. Throws std::domain_error for sigma = (1).
Representation gzd_of(const BigInt& n, const SequencePtr& seq);

/// Clears negative entries by repeatedly borrowing from the nearest positive
/// entry to the left of the leftmost negative one. Every step is a borrow.
/// Throws RepresentationError when an entry is below -c_1 or has no positive
/// entry to its left.
TracedRun repair_negatives(const SignedRepresentation& r, const TraceOptions& opts = {});

}  // namespace zeck
