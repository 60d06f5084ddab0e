#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/representation.hpp"
#include "zeck/sequence.hpp"

namespace zeck {

/// A guaranteed property did not hold: a weakly decreasing
/// signature produced a non-minimal gzd, or a constructor found no witness
/// where one must exist.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OracleMode { Dp, Bfs };

struct OracleOptions {
  /// Largest n the dp table may cover.
  std::uint64_t dp_budget = 50'000'000;
  bool fallback_to_bfs = true;
};

/// table[v] = fewest summands over all representations of v, v = 0..n.
std::vector<std::uint32_t> min_summand_table(const RecurrenceSequence& seq, std::uint64_t n);

/// Fewest summands of any non-negative representation of n.
BigInt min_summands(const BigInt& n, const SequencePtr& seq, OracleMode mode = OracleMode::Dp,
                    const OracleOptions& opts = {});

/// A representation of v attaining table[v]; `table` must cover v.
Representation min_summand_representation(const SequencePtr& seq,
                                          const std::vector<std::uint32_t>& table,
                                          std::uint64_t v);

struct Witness {
  BigInt n;
  Representation rep;
  BigInt rep_summands;
  Representation gzd;
  BigInt gzd_summands;
};

/// Wraps rep as a counterexample after checking it has fewer summands than
/// the gzd of its value. Throws FalsificationError otherwise.
Witness make_witness(const Representation& rep);

/// [c_1, ..., c_{i-2}, c_{i-1} + 1, 0] for the least i with c_i > c_1 >= 2.
Witness counterexample_prefix(const SequencePtr& seq);

/// First shift z <= max_shift where (c_1 + 1) H_z has a gzd with more than
/// c_1 + 1 summands; witness is c_1 + 1 copies of H_z.
Witness counterexample_cut_search(const SequencePtr& seq, std::size_t max_shift);

/// Least n <= max_n whose 2 H_n has a gzd with at least three summands.
/// For a weakly decreasing signature an empty result is the expected answer.
std::optional<Witness> counterexample_c1_one(const SequencePtr& seq, std::size_t max_n);

struct SearchBounds {
  /// Defaults to increase_profile(sig).p + 8.
  std::optional<std::size_t> max_shift;
  std::size_t max_n = 200;
};

struct Counterexample {
  /// "prefix", "cut-search" or "c1-one".
  std::string method;
  Witness witness;
};

/// Picks the constructor for the signature's case. Throws PreconditionError
/// for weakly decreasing signatures and FalsificationError when the
/// constructor comes back empty.
Counterexample counterexample(const SequencePtr& seq, const SearchBounds& bounds = {});

enum class Verdict { AllMinimal, Counterexample };

const char* to_string(Verdict v);

struct MinimalityReport {
  Signature sig;
  std::uint64_t scan_bound = 0;
  Verdict verdict = Verdict::AllMinimal;
  std::optional<Witness> witness;
  /// "sweep" for weakly decreasing signatures, otherwise the constructor.
  std::string method;
  /// Least n <= scan_bound whose gzd is not minimal.
  std::optional<std::uint64_t> least_n;
  bool falsified = false;
  std::string note;
};

/// Weakly decreasing: compare gzd summands with the oracle for n <= N.
/// Otherwise: sweep for the least non-minimal n and run the case
/// constructor. Falsification is reported in the result, not thrown.
MinimalityReport verify_theorem(const SequencePtr& seq, std::uint64_t N,
                                const SearchBounds& bounds = {});

/// Serial sweep kept as the reference for the parallel one.
std::optional<std::uint64_t> least_non_minimal_serial(const SequencePtr& seq, std::uint64_t N);
std::optional<std::uint64_t> least_non_minimal(const SequencePtr& seq, std::uint64_t N);

enum class TwoSummandForm { Single, PairEll2, PairEll2Plus1 };

const char* to_string(TwoSummandForm f);

struct FormHistogram {
  int ell1 = 0;
  std::optional<int> ell2;
  std::map<TwoSummandForm, std::uint64_t> counts;
  /// n whose gzd(2 H_n) has at most two summands but fits no form.
  std::vector<Index> violations;
  std::vector<Index> three_plus;
  /// Smallest n0 with no violation in [n0, n_hi].
  Index stable_from = 0;
};

/// Requires c_1 = 1 and sigma != (1).
FormHistogram classify_two_summand_forms(const SequencePtr& seq, Index n_lo, Index n_hi);

}  // namespace zeck
