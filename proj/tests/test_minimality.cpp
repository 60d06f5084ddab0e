#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "zeck/gzd.hpp"
#include "zeck/minimality.hpp"

using namespace zeck;

namespace {
SequencePtr seq_of(const char* s) { return make_sequence(parse_signature(s)); }
}  // namespace

TEST_CASE("min_summands examples") {
  CHECK(min_summands(4, seq_of("1,1")) == 2);
  CHECK(min_summands(6, seq_of("2,3")) == 3);
  CHECK(min_summands(0, seq_of("3,2,4")) == 0);
  CHECK(min_summands(4, seq_of("1,1"), OracleMode::Bfs) == 2);
  CHECK(min_summands(6, seq_of("2,3"), OracleMode::Bfs) == 3);
  CHECK(min_summands(0, seq_of("3,2,4"), OracleMode::Bfs) == 0);
  CHECK(min_summands(7, seq_of("1")) == 7);
}

TEST_CASE("dp table matches exhaustive search") {
  for (const auto& s : enumerate_signatures(3, 3)) {
    auto seq = make_sequence(s);
    const auto table = min_summand_table(*seq, 120);
    for (std::int64_t n = 0; n <= 120; ++n) {
      CAPTURE(s.to_string());
      CAPTURE(n);
      CHECK(static_cast<std::int64_t>(table[n]) == oracle::min_coins(s.coeffs(), n));
    }
  }
}

TEST_CASE("dp and bfs agree") {
  std::mt19937_64 rng(3);
  const auto corpus = enumerate_signatures(5, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Signature& s = corpus[rng() % corpus.size()];
    auto seq = make_sequence(s);
    const std::uint64_t n = rng() % 10001;
    CAPTURE(s.to_string());
    CAPTURE(n);
    CHECK(min_summands(n, seq, OracleMode::Dp) == min_summands(n, seq, OracleMode::Bfs));
  }
}

TEST_CASE("dp budget") {
  OracleOptions opts;
  opts.dp_budget = 10;
  opts.fallback_to_bfs = false;
  CHECK_THROWS_AS(min_summands(11, seq_of("1,1"), OracleMode::Dp, opts), std::length_error);
  opts.fallback_to_bfs = true;
  CHECK(min_summands(11, seq_of("1,1"), OracleMode::Dp, opts) == 2);
}

TEST_CASE("oracle never beats a produced representation") {
  for (const char* sig : {"1,1", "2,3", "1,0,2", "3,1,2"}) {
    auto seq = seq_of(sig);
    const auto table = min_summand_table(*seq, 500);
    for (std::uint64_t n = 0; n <= 500; ++n) {
      CHECK(table[n] <= gzd_of(n, seq).summand_count());
      auto best = min_summand_representation(seq, table, n);
      CHECK(best.value() == n);
      CHECK(best.summand_count() == table[n]);
    }
  }
}

TEST_CASE("verify_theorem") {
  auto r = verify_theorem(seq_of("4,3,2"), 2000);
  CHECK(r.verdict == Verdict::AllMinimal);
  CHECK_FALSE(r.falsified);
  CHECK_FALSE(r.least_n.has_value());

  r = verify_theorem(seq_of("1,1"), 5000);
  CHECK(r.verdict == Verdict::AllMinimal);
  CHECK_FALSE(r.falsified);

  r = verify_theorem(seq_of("2,3"), 100);
  CHECK(r.verdict == Verdict::Counterexample);
  CHECK_FALSE(r.falsified);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->n == 6);
  CHECK(r.least_n == 6u);
  CHECK(r.method == "prefix");

  CHECK_THROWS(verify_theorem(seq_of("2,3"), 0));
}

TEST_CASE("prefix constructor") {
  auto w = counterexample_prefix(seq_of("2,3"));
  CHECK(w.rep.to_string() == "[3,0]");
  CHECK(w.n == 6);
  CHECK(w.rep_summands == 3);
  CHECK(w.gzd_summands == 4);
  CHECK(min_summands(w.n, seq_of("2,3")) <= w.rep_summands);

  auto seq = seq_of("2,0,3");
  w = counterexample_prefix(seq);
  CHECK(w.rep.to_string() == "[2,1,0]");
  CHECK(w.n == w.rep.value());
  CHECK(w.gzd_summands >= w.rep_summands + 1);

  CHECK_THROWS_AS(counterexample_prefix(seq_of("3,2")), PreconditionError);
  CHECK_THROWS_AS(counterexample_prefix(seq_of("1,2")), PreconditionError);
}

TEST_CASE("prefix trace is one borrow of size -1 + c_1") {
  for (const char* sig : {"2,3", "2,0,3", "3,1,2,4", "2,2,3"}) {
    auto seq = seq_of(sig);
    auto w = counterexample_prefix(seq);
    auto run = to_gzd(w.rep);
    CHECK(run.result == w.gzd);
    CHECK(delta_summands(run.trace) ==
          static_cast<std::int64_t>(w.gzd_summands - w.rep_summands));
    CHECK(delta_summands(run.trace) >= seq->signature().c(1) - 1);
  }
}

TEST_CASE("cut search") {
  auto w = counterexample_cut_search(seq_of("2,0,1,2"), 2 + 8);
  CHECK(w.rep_summands == 3);
  CHECK(w.gzd_summands > 3);

  w = counterexample_cut_search(seq_of("2,1,1,2"), 3 + 8);
  CHECK(w.rep_summands == 3);
  CHECK(w.gzd_summands == 6);
  CHECK(w.gzd.to_string() == "[1,0,0,2,1,1,1]");

  // the four-summand gzds of the (2,1,1,2,c_5) edge case
  w = counterexample_cut_search(seq_of("2,1,1,2,2"), 3 + 8);
  CHECK(w.gzd.to_string() == "[1,0,0,2,0,1]");
  w = counterexample_cut_search(seq_of("2,1,1,2,1"), 3 + 8);
  CHECK(w.gzd.to_string() == "[1,0,0,2,1,0]");

  CHECK_THROWS_AS(counterexample_cut_search(seq_of("3,2,1"), 10), PreconditionError);
  CHECK_THROWS_AS(counterexample_cut_search(seq_of("2,3"), 10), PreconditionError);
  CHECK_THROWS_AS(counterexample_cut_search(seq_of("2,0,1,2"), 4), PreconditionError);
}

TEST_CASE("c1 = 1 search") {
  for (const char* sig : {"1,0,2", "1,2"}) {
    auto w = counterexample_c1_one(seq_of(sig), 200);
    REQUIRE(w.has_value());
    CHECK(w->rep_summands == 2);
    CHECK(w->gzd_summands >= 3);
  }
  CHECK_FALSE(counterexample_c1_one(seq_of("1,1"), 500).has_value());
  CHECK_THROWS_AS(counterexample_c1_one(seq_of("2,3"), 10), PreconditionError);
}

TEST_CASE("dispatch") {
  CHECK(counterexample(seq_of("2,3")).method == "prefix");
  CHECK(counterexample(seq_of("2,0,1,2")).method == "cut-search");
  CHECK(counterexample(seq_of("1,0,2")).method == "c1-one");
  CHECK_THROWS_AS(counterexample(seq_of("3,2,1")), PreconditionError);
}

TEST_CASE("serial and parallel sweeps agree") {
  for (const auto& s : enumerate_signatures(3, 3)) {
    if (s.depth() == 1 && s.c(1) == 1) continue;
    auto seq = make_sequence(s);
    CHECK(least_non_minimal(seq, 300) == least_non_minimal_serial(seq, 300));
  }
}

TEST_CASE("two summand forms") {
  auto fib = seq_of("1,1");
  auto h = classify_two_summand_forms(fib, 10, 40);
  CHECK(h.ell1 == 1);
  CHECK(h.ell2 == 2);
  CHECK(h.counts[TwoSummandForm::PairEll2] == 31);
  CHECK(h.violations.empty());
  CHECK(h.three_plus.empty());
  CHECK(h.stable_from == 10);

  auto other = classify_two_summand_forms(seq_of("1,0,2"), 20, 120);
  std::uint64_t total = other.three_plus.size() + other.violations.size();
  for (auto& [form, count] : other.counts) total += count;
  CHECK(total == 101);

  CHECK_THROWS_AS(classify_two_summand_forms(seq_of("1"), 1, 5), PreconditionError);
  CHECK_THROWS_AS(classify_two_summand_forms(seq_of("2,1"), 1, 5), PreconditionError);
}
