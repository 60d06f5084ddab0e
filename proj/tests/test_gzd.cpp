#include "doctest.h"

#include <map>
#include <random>

#include "oracles.hpp"
#include "zeck/gzd.hpp"

using namespace zeck;

namespace {

SequencePtr seq_of(const char* s) { return make_sequence(parse_signature(s)); }

std::vector<std::string> actions(const StepTrace& t) {
  std::vector<std::string> out;
  for (const auto& s : t.steps) {
    out.push_back(std::string(to_string(s.kind)) + " " + std::to_string(s.index) +
                  (s.chained ? " chained" : ""));
  }
  return out;
}

Representation random_rep(const SequencePtr& seq, std::mt19937_64& rng, std::size_t max_len,
                          int max_digit) {
  std::vector<BigInt> d(1 + rng() % max_len);
  for (auto& x : d) x = rng() % (max_digit + 1);
  return Representation(seq, d);
}

}  // namespace

TEST_CASE("worked example for 5,3,1") {
  auto seq = seq_of("5,3,1");
  auto run = to_gzd(parse_representation(seq, "[1,5,3,0,5,4,0,6]"));
  CHECK(run.result.to_string() == "[2,0,0,0,0,1,0,1]");
  CHECK(actions(run.trace) == std::vector<std::string>{"borrow 2", "carry 4", "carry 7 chained",
                                                       "carry 1", "carry 2"});
  std::vector<std::string> rows;
  for (const auto& s : run.trace.steps) rows.push_back(s.snapshot->to_string());
  CHECK(rows == std::vector<std::string>{"[1,5,3,0,5,3,5,9]", "[1,5,3,1,0,0,4,9]",
                                         "[2,0,0,0,0,0,4,9]", "[2,0,0,0,0,0,5,4]",
                                         "[2,0,0,0,0,1,0,1]"});
  CHECK(delta_summands(run.trace) ==
        static_cast<std::int64_t>(run.trace.final_summands - run.trace.initial_summands));
}

TEST_CASE("borrow then carry for 3,2,4") {
  auto seq = seq_of("3,2,4");
  auto run = to_gzd(parse_representation(seq, "[3,2,1,1,3,0,3,3,1]"));
  CHECK(actions(run.trace) == std::vector<std::string>{"borrow 1", "carry 3"});
  CHECK(run.trace.steps[0].snapshot->to_string() == "[3,2,1,1,3,0,3,2,4]");
  CHECK(run.result.to_string() == "[3,2,1,1,3,1,0,0,0]");
}

TEST_CASE("a gzd is a fixed point") {
  auto seq = seq_of("4,3,2");
  auto g = gzd_of(12345, seq);
  auto run = to_gzd(g);
  CHECK(run.trace.steps.empty());
  CHECK(run.result == g);
  CHECK(delta_summands(run.trace) == 0);
}

TEST_CASE("gzd_of examples") {
  CHECK(gzd_of(312, seq_of("10")).to_string() == "[3,1,2]");
  CHECK(gzd_of(4, seq_of("1,1")).to_string() == "[1,0,1,0]");
  CHECK(gzd_of(1, seq_of("1,1")).to_string() == "[1,0]");
  CHECK(gzd_of(0, seq_of("3,2,4")).to_string() == "[0]");
  CHECK(gzd_of(6, seq_of("2,3")).to_string() == "[2,2]");
  CHECK_THROWS_AS(gzd_of(3, seq_of("1")), std::domain_error);
}

TEST_CASE("gzd_of is the unique block string") {
  for (const auto& s : enumerate_signatures(4, 3)) {
    if (s.depth() == 1 && s.c(1) == 1) continue;
    auto seq = make_sequence(s);
    const std::size_t len = 7;
    const auto h = oracle::terms(s.coeffs(), len + 1);
    std::map<std::int64_t, int> hits;
    for (const auto& str : oracle::block_strings(s.coeffs(), len)) {
      const std::int64_t v = oracle::value(s.coeffs(), str);
      ++hits[v];
      CAPTURE(s.to_string());
      CAPTURE(v);
      std::string literal = "[";
      const auto trimmed = oracle::trim(str);
      for (std::size_t i = 0; i < trimmed.size(); ++i) {
        literal += (i ? "," : "") + std::to_string(trimmed[i]);
      }
      literal += "]";
      CHECK(gzd_of(v, seq).to_string() == literal);
    }
    // each value below H_len has exactly one representation of length len
    CHECK(hits.size() == static_cast<std::size_t>(h[len]));
    for (auto& [v, count] : hits) {
      CHECK(v < h[len]);
      CHECK(count == 1);
    }
  }
}

TEST_CASE("to_gzd agrees with gzd_of") {
  std::mt19937_64 rng(11);
  const auto corpus = enumerate_signatures(5, 3);
  for (int trial = 0; trial < 1500; ++trial) {
    const Signature& s = corpus[rng() % corpus.size()];
    if (s.depth() == 1 && s.c(1) == 1) continue;
    auto seq = make_sequence(s);
    auto r = random_rep(seq, rng, 12, 20);
    CAPTURE(s.to_string());
    CAPTURE(r.to_string());
    auto run = to_gzd(r);
    CHECK(run.result == gzd_of(r.value(), seq));
    CHECK(legality(run.result).is_gzd());
    CHECK(block_decomposition(run.result).suffix.empty());
    CHECK(delta_summands(run.trace) ==
          static_cast<std::int64_t>(run.result.summand_count() - r.summand_count()));
    for (const auto& step : run.trace.steps) {
      if (step.snapshot) CHECK(step.snapshot->value() == r.value());
      CHECK(step.snapshot_hash != 0);
    }
  }
}

TEST_CASE("naive representation [n] reaches gzd_of") {
  for (const char* sig : {"1,1", "2,3", "1,0,2", "5,3,1", "2,0,0,3"}) {
    auto seq = seq_of(sig);
    for (int n = 0; n <= 150; ++n) {
      CAPTURE(sig);
      CAPTURE(n);
      CHECK(to_gzd(Representation(seq, {BigInt(n)})).result == gzd_of(n, seq));
    }
  }
}

TEST_CASE("gzd_of for large n") {
  auto seq = seq_of("2,0,1,2");
  const BigInt n = parse_bigint("98765432109876543210987654321");
  auto g = gzd_of(n, seq);
  CHECK(g.value() == n);
  CHECK(legality(g).is_gzd());
}

TEST_CASE("step limit") {
  auto seq = seq_of("1,1");
  TraceOptions opts;
  opts.step_limit = 3;
  CHECK_THROWS_AS(to_gzd(Representation(seq, {BigInt(100)}), opts), InvariantError);
}

TEST_CASE("snapshot depth") {
  auto seq = seq_of("1,1");
  TraceOptions opts;
  opts.snapshot_depth = 2;
  auto run = to_gzd(Representation(seq, {BigInt(100)}), opts);
  REQUIRE(run.trace.steps.size() > 2);
  CHECK(run.trace.steps[1].snapshot.has_value());
  CHECK_FALSE(run.trace.steps[2].snapshot.has_value());
}

TEST_CASE("negative repair") {
  auto seq = seq_of("2,1");
  auto fixed = repair_negatives(SignedRepresentation(seq, {1, 0, -1}));
  CHECK(fixed.result.to_string() == "[2,0]");
  CHECK(fixed.result.value() == 4);
  REQUIRE(fixed.trace.steps.size() == 1);
  CHECK(fixed.trace.steps[0].kind == StepKind::Borrow);
  CHECK(fixed.trace.steps[0].index == 2);

  auto clean = repair_negatives(SignedRepresentation(seq, {1, 2, 0}));
  CHECK(clean.trace.steps.empty());
  CHECK(clean.result.to_string() == "[1,2,0]");

  CHECK_THROWS_AS(repair_negatives(SignedRepresentation(seq, {0, 0, -1})), RepresentationError);
  CHECK_THROWS_AS(repair_negatives(SignedRepresentation(seq, {1, 0, -3})), RepresentationError);
}

TEST_CASE("negative repair fuzz") {
  // Borrowing only reaches a negative entry through nonzero c_i, so some
  // inputs are rejected; those that are repaired must keep their value.
  std::mt19937_64 rng(5);
  const auto corpus = enumerate_signatures(4, 3);
  int repaired = 0;
  int rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Signature& s = corpus[rng() % corpus.size()];
    auto seq = make_sequence(s);
    std::vector<BigInt> d(2 + rng() % 8);
    d[0] = 1 + rng() % 3;
    for (std::size_t i = 1; i < d.size(); ++i) {
      const std::int64_t c1 = s.c(1);
      d[i] = static_cast<std::int64_t>(rng() % (2 * c1 + 3)) - c1;
    }
    SignedRepresentation r(seq, d);
    try {
      auto out = repair_negatives(r);
      ++repaired;
      CHECK(out.result.value() == r.value());
      for (const auto& step : out.trace.steps) {
        CHECK(step.kind == StepKind::Borrow);
        CHECK(step.delta >= 0);
      }
    } catch (const RepresentationError&) {
      ++rejected;
    }
  }
  CHECK(repaired > 1500);
  CHECK(repaired + rejected == 2000);
}

TEST_CASE("single negative right after a positive is always repaired") {
  for (const auto& s : enumerate_signatures(4, 3)) {
    auto seq = make_sequence(s);
    for (std::int64_t neg = 1; neg <= s.c(1); ++neg) {
      for (std::size_t tail = 0; tail <= 4; ++tail) {
        std::vector<BigInt> d{1, 0, 1, -neg};
        d.resize(4 + tail, 0);
        SignedRepresentation r(seq, d);
        auto out = repair_negatives(r);
        CHECK(out.result.value() == r.value());
      }
    }
  }
}
