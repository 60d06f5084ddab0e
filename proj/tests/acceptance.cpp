// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zeck/gzd.hpp"
#include "zeck/hankel.hpp"
#include "zeck/minimality.hpp"

using namespace zeck;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

// Runtime limits in seconds.
constexpr double kReplayLimit = 1.0;
constexpr double kForwardLimit = 60.0;
constexpr double kSuiteLimit = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string run_cli(const std::string& args, int* status) {
  const std::string cmd = std::string(GZD_CLI_PATH) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  *status = pclose(pipe.release());
  return out;
}

bool is_weakly_decreasing_corpus_member(const Signature& s) { return is_weakly_decreasing(s); }

Outcome criterion_replay() {
  const std::vector<std::string> expected_rows = {
      "[1,5,3,0,5,4,0,6]", "[1,5,3,0,5,3,5,9]", "[1,5,3,1,0,0,4,9]",
      "[2,0,0,0,0,0,4,9]", "[2,0,0,0,0,0,5,4]", "[2,0,0,0,0,1,0,1]"};
  const std::string args = "run --sig 5,3,1 --rep [1,5,3,0,5,4,0,6]";
  int status = 0;
  const std::string text = run_cli(args, &status);
  if (status != 0) return {false, "cli exit status " + std::to_string(status)};

  // state rows of the text table are the ones showing infinity places
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line)) {
    last = line;
    if (line.find("inf") == std::string::npos || line.rfind("index", 0) == 0) continue;
    std::istringstream cells(line.substr(line.find('|') + 1));
    std::string cell, digits;
    while (cells >> cell) {
      if (cell == "inf") break;
      digits += (digits.empty() ? "" : ",") + cell;
    }
    rows.push_back("[" + digits + "]");
  }
  if (rows != expected_rows) return {false, "table rows differ"};
  if (last != "[2,0,0,0,0,1,0,1]") return {false, "final line is " + last};

  const json j = json::parse(run_cli(args + " --json", &status));
  std::vector<std::string> after{expected_rows.front()};
  for (const auto& st : j["steps"]) after.push_back(st["after"].get<std::string>());
  if (after != expected_rows) return {false, "json rows differ"};
  return {true, "6 rows and final line match"};
}

Outcome criterion_table3() {
  auto seq = make_sequence(parse_signature("3,2,4"));
  const TracedRun run = to_gzd(parse_representation(seq, "[3,2,1,1,3,0,3,3,1]"));
  const auto& st = run.trace.steps;
  const bool ok = st.size() == 2 && st[0].kind == StepKind::Borrow && st[0].index == 1 &&
                  st[1].kind == StepKind::Carry && st[1].index == 3 && !st[1].chained &&
                  run.result.to_string() == "[3,2,1,1,3,1,0,0,0]";
  return {ok, "borrow 1, carry 3 -> " + run.result.to_string()};
}

Outcome criterion_forward() {
  std::size_t count = 0;
  for (const auto& s : enumerate_signatures(4, 3)) {
    if (!is_weakly_decreasing_corpus_member(s) || (s.depth() == 1 && s.c(1) == 1)) continue;
    ++count;
    auto bad = least_non_minimal(make_sequence(s), 2000);
    if (bad) return {false, s.to_string() + " fails at n=" + std::to_string(*bad)};
  }
  return {true, std::to_string(count) + " signatures, n <= 2000"};
}

Outcome criterion_converse() {
  std::size_t count = 0;
  std::map<std::string, std::size_t> by_method;
  for (const auto& s : enumerate_signatures(4, 3)) {
    if (is_weakly_decreasing(s)) continue;
    ++count;
    auto seq = make_sequence(s);
    std::optional<Counterexample> c;
    try {
      c = counterexample(seq);
    } catch (const FalsificationError& e) {
      return {false, s.to_string() + ": " + e.what()};
    }
    const Witness& w = c->witness;
    const BigInt oracle = min_summands(w.n, seq);
    if (w.rep.value() != w.n || !(oracle <= w.rep_summands && w.rep_summands < w.gzd_summands) ||
        to_gzd(w.rep).result != w.gzd) {
      return {false, s.to_string() + ": witness failed the oracle check"};
    }
    ++by_method[c->method];
  }
  std::string detail = std::to_string(count) + " signatures (";
  for (auto& [m, k] : by_method) detail += m + " " + std::to_string(k) + ", ";
  detail.resize(detail.size() - 2);
  return {true, detail + ")"};
}

// Random representation of n: at each index from the top take a uniform
// multiple of H_i that fits, leaving the rest for lower indices.
Representation random_rep_of(const SequencePtr& seq, const BigInt& n, std::mt19937_64& rng) {
  const Index top = std::max<Index>(seq->largest_index_at_most(n), 0);
  std::vector<BigInt> lsd(static_cast<std::size_t>(top) + 1);
  BigInt rem = n;
  for (Index i = top; i >= 1; --i) {
    const BigInt most = rem / seq->term(i);
    const BigInt d = most == 0 ? BigInt(0) : BigInt(rng() % static_cast<std::uint64_t>(most + 1));
    lsd[static_cast<std::size_t>(i)] = d;
    rem -= d * seq->term(i);
  }
  lsd[0] = rem;
  return Representation::from_lsd(seq, lsd);
}

Outcome criterion_confluence() {
  std::mt19937_64 rng(20240601);
  auto corpus = enumerate_signatures(5, 3);
  std::erase_if(corpus, [](const Signature& s) { return s.depth() == 1 && s.c(1) == 1; });
  TraceOptions opts;
  opts.snapshot_depth = opts.step_limit;
  std::size_t steps = 0;
  for (int pair = 0; pair < 1000; ++pair) {
    const Signature& s = corpus[rng() % corpus.size()];
    auto seq = make_sequence(s);
    const BigInt n = rng() % 20001;
    const Representation expect = gzd_of(n, seq);
    for (int k = 0; k < 3; ++k) {
      const Representation start = random_rep_of(seq, n, rng);
      const TracedRun run = to_gzd(start, opts);
      if (run.result != expect) {
        return {false, s.to_string() + " n=" + n.str() + " from " + start.to_string()};
      }
      Index sli = legality(start).sli;
      for (const auto& st : run.trace.steps) {
        ++steps;
        if (st.snapshot->value() != n) return {false, "value changed for " + start.to_string()};
        if (st.chained) continue;
        if (st.sli_before > sli) return {false, "s.l.i. increased for " + start.to_string()};
        sli = st.sli_before;
      }
      if (legality(run.result).sli > sli) return {false, "final s.l.i. increased"};
    }
  }
  return {true, "3000 runs, " + std::to_string(steps) + " steps"};
}

Outcome criterion_deltas() {
  std::mt19937_64 rng(77);
  const auto corpus = enumerate_signatures(5, 3);
  std::size_t borrows = 0, carries = 0, pairs = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Signature& s = corpus[rng() % corpus.size()];
    auto seq = make_sequence(s);
    const auto t = static_cast<Index>(s.depth());
    const std::int64_t pure = -1 + s.total();
    std::vector<BigInt> d(static_cast<std::size_t>(t) + 1 + rng() % 8);
    for (auto& x : d) x = rng() % 8;
    const Representation r(seq, d);
    if (r.top_index() < t) continue;
    const Index i = t + static_cast<Index>(rng() % static_cast<std::uint64_t>(r.top_index() - t + 1));
    if (r.digit(i) >= 1) {
      const Representation b = borrow(r, i);
      if (b.summand_count() - r.summand_count() != pure) return {false, "borrow delta"};
      ++borrows;
      for (Index j = t; j <= b.top_index(); ++j) {
        if (!able_to_carry(b, j)) continue;
        const Representation c = carry(b, j);
        if (c.summand_count() != r.summand_count()) return {false, "borrow + carry not net zero"};
        ++pairs;
        break;
      }
    }
    if (able_to_carry(r, i)) {
      const Representation c = carry(r, i);
      if (c.summand_count() - r.summand_count() != -pure) return {false, "carry delta"};
      ++carries;
    }
  }
  const bool enough = borrows > 1000 && carries > 100 && pairs > 100;
  return {enough, std::to_string(borrows) + " borrows, " + std::to_string(carries) + " carries, " +
                      std::to_string(pairs) + " borrow+carry pairs"};
}

Outcome criterion_schinzel() {
  for (int r = 2; r <= 30; ++r) {
    for (int s = 1; s < r; ++s) {
      IntPolynomial prod{1};
      for (const auto& f : schinzel_factors(r, s)) prod = prod * f;
      if (prod != h_poly(r, s)) return {false, "product differs at " + std::to_string(r) + "," + std::to_string(s)};
    }
  }
  const auto a = schinzel_factors(7, 2);
  const auto b = schinzel_factors(7, 5);
  const bool ok = a.size() == 2 && a[0] == IntPolynomial{-1, 0, 1, 1} && a[1] == IntPolynomial{1, 1, 0, 1} &&
                  b.size() == 2 && b[0] == IntPolynomial{1, 0, 1, 1} && b[1] == IntPolynomial{-1, -1, 0, 1};
  return {ok, "435 pairs; (7,2) = (" + a[0].to_string() + ")(" + a[1].to_string() + "), (7,5) = (" +
                  b[0].to_string() + ")(" + b[1].to_string() + ")"};
}

Outcome criterion_hankel() {
  const auto corpus = enumerate_signatures(5, 3);
  for (const auto& s : corpus) {
    RecurrenceSequence seq(s);
    const std::size_t t = s.depth();
    const Index first = seq.first_index();
    if (abs(hankel_det(seq, first, t - 1)) != 1) return {false, s.to_string() + ": initial determinant"};
    for (Index n = 0; n <= 10; ++n) {
      if (hankel_det(seq, n, t) != 0) return {false, s.to_string() + ": det H_{n,t} != 0"};
    }
    for (Index n = first; n <= 15; ++n) {
      if (abs(hankel_det(seq, n + 1, t - 1)) != s.c(t) * abs(hankel_det(seq, n, t - 1))) {
        return {false, s.to_string() + ": ratio fails at n=" + std::to_string(n)};
      }
    }
  }
  return {true, std::to_string(corpus.size()) + " signatures"};
}

Outcome criterion_scan() {
  std::mt19937_64 rng(59);
  auto pool = enumerate_signatures(5, 3);
  std::erase_if(pool, [](const Signature& s) { return is_all_ones(s); });
  std::shuffle(pool.begin(), pool.end(), rng);
  std::string picked;
  for (std::size_t k = 0; k < 20; ++k) {
    const auto rep = char_divides_g_scan(pool[k], 20);
    if (!rep.hits.empty()) return {false, pool[k].to_string() + " has a hit"};
    picked += (k ? " " : "") + ("(" + pool[k].to_string() + ")");
  }
  for (std::size_t len = 2; len <= 6; ++len) {
    const Signature ones(std::vector<std::int64_t>(len, 1));
    const auto rep = char_divides_g_scan(ones, 20);
    const DivisibilityHit want{static_cast<int>(len) + 1, static_cast<int>(len)};
    if (rep.hits.size() != 1 || rep.hits[0] != want) return {false, "all-ones length " + std::to_string(len)};
  }
  return {true, "20 random signatures with no hits, all-ones 2..6 hit only (t+1,t)"};
}

Outcome criterion_forms() {
  auto fib = make_sequence(parse_signature("1,1"));
  const FormHistogram h = classify_two_summand_forms(fib, 10, 40);
  const auto it = h.counts.find(TwoSummandForm::PairEll2);
  if (h.ell1 != 1 || h.ell2 != 2 || it == h.counts.end() || it->second != 31 || !h.violations.empty() ||
      !h.three_plus.empty()) {
    return {false, "fibonacci forms"};
  }
  std::string detail = "(1,1) n=10..40 all H[n+1]+H[n-2]";
  for (const char* sig : {"1,0,2", "1,2"}) {
    auto w = counterexample_c1_one(make_sequence(parse_signature(sig)), 200);
    if (!w) return {false, std::string(sig) + ": no witness with n <= 200"};
    detail += std::string("; (") + sig + ") 2H_" + std::to_string(w->rep.top_index()) + " has " +
              w->gzd_summands.str() + " summands";
  }
  return {true, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit;
  };
  const std::vector<Criterion> criteria = {
      {1, "replay of the 5,3,1 worked example", criterion_replay, kReplayLimit},
      {2, "replay of the 3,2,4 borrow then carry", criterion_table3, 0},
      {3, "forward direction, weakly decreasing t<=4 c<=3 n<=2000", criterion_forward, kForwardLimit},
      {4, "converse direction, every other signature t<=4 c<=3", criterion_converse, 0},
      {5, "confluence and s.l.i. monotonicity", criterion_confluence, 0},
      {6, "pure borrow and carry deltas", criterion_deltas, 0},
      {7, "Schinzel factorizations r<=30", criterion_schinzel, 0},
      {8, "Hankel determinant suite", criterion_hankel, 0},
      {9, "characteristic polynomial never divides g(r,s)", criterion_scan, 0},
      {10, "two-summand forms and c1=1 witnesses", criterion_forms, 0},
  };

  int failures = 0;
  const auto suite_start = Clock::now();
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(c.limit) + " s limit)";
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  const bool in_budget = failures == 0 && total <= kSuiteLimit;
  failures += in_budget ? 0 : 1;
  std::printf("[%s] 11 whole suite under %.0f s with criteria 1-10 green (%.2f s)\n", in_budget ? "PASS" : "FAIL",
              kSuiteLimit, total);
  return failures;
}
