#include "zeck/minimality.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "zeck/gzd.hpp"
#include "zeck/kernels.hpp"

namespace zeck {

namespace {

// Distinct term values <= bound, ascending, each with the largest index
// carrying that value.
std::vector<std::pair<Index, BigInt>> coins(const RecurrenceSequence& seq, const BigInt& bound) {
  std::vector<std::pair<Index, BigInt>> out;
  if (seq.signature().depth() == 1 && seq.signature().c(1) == 1) {
    out.emplace_back(0, BigInt(1));
    return out;
  }
  for (auto& [m, h] : seq.terms_up_to(bound)) {
    if (!out.empty() && out.back().second == h) {
      out.back().first = m;
    } else {
      out.emplace_back(m, h);
    }
  }
  return out;
}

BigInt bfs_min_summands(const BigInt& n, const RecurrenceSequence& seq) {
  if (n == 0) return 0;
  const auto cs = coins(seq, n);
  std::set<BigInt> frontier{n};
  std::set<BigInt> seen{n};
  BigInt level = 0;
  while (!frontier.empty()) {
    ++level;
    std::set<BigInt> next;
    for (const auto& v : frontier) {
      for (const auto& [m, h] : cs) {
        if (h > v) break;
        BigInt rest = v - h;
        if (rest == 0) return level;
        if (seen.insert(rest).second) next.insert(std::move(rest));
      }
    }
    frontier = std::move(next);
  }
  throw std::logic_error("bfs exhausted without reaching zero");
}

std::uint64_t to_u64(const BigInt& v) { return static_cast<std::uint64_t>(v); }

void require_c1_one(const Signature& sig) {
  if (sig.c(1) != 1) throw PreconditionError("needs c_1 = 1, got " + sig.to_string());
  if (sig.depth() == 1) throw PreconditionError("sigma = (1) has no gzd");
}

std::vector<BigInt> doubled_terms(const RecurrenceSequence& seq, Index lo, Index hi) {
  const auto h = seq.terms(hi);
  std::vector<BigInt> out;
  for (Index n = lo; n <= hi; ++n) out.push_back(2 * h[static_cast<std::size_t>(n)]);
  return out;
}

template <typename Batch>
std::optional<std::uint64_t> least_non_minimal_with(const SequencePtr& seq, std::uint64_t N,
                                                    Batch batch) {
  const auto table = min_summand_table(*seq, N);
  const auto values = iota_values(N);
  const auto gzds = batch(seq, values);
  for (std::uint64_t v = 0; v <= N; ++v) {
    const BigInt s = gzds[v].summand_count();
    if (s != table[v]) return v;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint32_t> min_summand_table(const RecurrenceSequence& seq, std::uint64_t n) {
  std::vector<std::uint64_t> cs;
  for (auto& [m, h] : coins(seq, BigInt(n))) cs.push_back(to_u64(h));
  std::vector<std::uint32_t> table(n + 1, std::numeric_limits<std::uint32_t>::max());
  table[0] = 0;
  for (std::uint64_t v = 1; v <= n; ++v) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::uint64_t c : cs) {
      if (c > v) break;
      best = std::min(best, table[v - c] + 1);
    }
    table[v] = best;
  }
  return table;
}

BigInt min_summands(const BigInt& n, const SequencePtr& seq, OracleMode mode,
                    const OracleOptions& opts) {
  if (n < 0) throw std::invalid_argument("min_summands needs n >= 0");
  if (mode == OracleMode::Dp) {
    if (n <= opts.dp_budget) return min_summand_table(*seq, to_u64(n)).back();
    if (!opts.fallback_to_bfs) {
      throw std::length_error("n = " + n.str() + " exceeds the dp budget of " +
                              std::to_string(opts.dp_budget));
    }
  }
  return bfs_min_summands(n, *seq);
}

Representation min_summand_representation(const SequencePtr& seq,
                                          const std::vector<std::uint32_t>& table,
                                          std::uint64_t v) {
  if (v >= table.size()) throw std::out_of_range("value outside the oracle table");
  const auto cs = coins(*seq, BigInt(v));
  std::vector<BigInt> lsd(cs.empty() ? 1 : static_cast<std::size_t>(cs.back().first) + 1);
  while (v > 0) {
    bool moved = false;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      const std::uint64_t h = to_u64(it->second);
      if (h <= v && table[v - h] + 1 == table[v]) {
        lsd[static_cast<std::size_t>(it->first)] += 1;
        v -= h;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("oracle table is inconsistent");
  }
  return Representation::from_lsd(seq, std::move(lsd));
}

Witness make_witness(const Representation& rep) {
  const BigInt n = rep.value();
  Representation g = gzd_of(n, rep.sequence());
  Witness w{n, rep, rep.summand_count(), g, g.summand_count()};
  if (w.rep_summands >= w.gzd_summands) {
    throw FalsificationError("representation " + rep.to_string() + " of " + n.str() + " has " +
                             w.rep_summands.str() + " summands, gzd " + g.to_string() + " has " +
                             w.gzd_summands.str());
  }
  return w;
}

Witness counterexample_prefix(const SequencePtr& seq) {
  const Signature& sig = seq->signature();
  const std::int64_t c1 = sig.c(1);
  if (c1 < 2) throw PreconditionError("prefix construction needs c_1 >= 2");
  std::size_t i = 0;
  for (std::size_t j = 2; j <= sig.depth(); ++j) {
    if (sig.c(j) > c1) {
      i = j;
      break;
    }
  }
  if (i == 0) throw PreconditionError("no c_i exceeds c_1 in " + sig.to_string());
  std::vector<BigInt> digits;
  for (std::size_t j = 1; j + 2 <= i; ++j) digits.emplace_back(sig.c(j));
  digits.emplace_back(sig.c(i - 1) + 1);
  digits.emplace_back(0);
  return make_witness(Representation(seq, digits));
}

Witness counterexample_cut_search(const SequencePtr& seq, std::size_t max_shift) {
  const Signature& sig = seq->signature();
  if (is_weakly_decreasing(sig)) {
    throw PreconditionError(sig.to_string() + " is weakly decreasing");
  }
  const std::int64_t c1 = sig.c(1);
  if (c1 < 2) throw PreconditionError("cut search needs c_1 >= 2");
  for (std::size_t i = 2; i <= sig.depth(); ++i) {
    if (sig.c(i) > c1) throw PreconditionError("cut search needs every c_i <= c_1");
  }
  const std::size_t p = increase_profile(sig).p;
  if (max_shift < p + 3) {
    throw PreconditionError("max_shift must be at least p + 3 = " + std::to_string(p + 3));
  }
  for (std::size_t z = 0; z <= max_shift; ++z) {
    auto rep = Representation::monomial(seq, BigInt(c1 + 1), static_cast<Index>(z));
    const Representation g = gzd_of(rep.value(), seq);
    if (g.summand_count() > c1 + 1) return make_witness(rep);
  }
  throw FalsificationError("cut search found no witness for " + sig.to_string() +
                           " with shift <= " + std::to_string(max_shift));
}

std::optional<Witness> counterexample_c1_one(const SequencePtr& seq, std::size_t max_n) {
  require_c1_one(seq->signature());
  const auto values = doubled_terms(*seq, 0, static_cast<Index>(max_n));
  const auto gzds = parallel::gzd_batch(seq, values);
  for (std::size_t n = 0; n < gzds.size(); ++n) {
    if (gzds[n].summand_count() >= 3) {
      return make_witness(Representation::monomial(seq, BigInt(2), static_cast<Index>(n)));
    }
  }
  return std::nullopt;
}

Counterexample counterexample(const SequencePtr& seq, const SearchBounds& bounds) {
  const Signature& sig = seq->signature();
  if (is_weakly_decreasing(sig)) {
    throw PreconditionError(sig.to_string() + " is weakly decreasing; its gzd is minimal");
  }
  const std::int64_t c1 = sig.c(1);
  if (c1 == 1) {
    auto w = counterexample_c1_one(seq, bounds.max_n);
    if (!w) {
      throw FalsificationError("no n <= " + std::to_string(bounds.max_n) +
                               " has a gzd of 2 H_n with three summands for " + sig.to_string());
    }
    return {"c1-one", std::move(*w)};
  }
  const auto& cs = sig.coeffs();
  if (std::any_of(cs.begin(), cs.end(), [c1](std::int64_t c) { return c > c1; })) {
    return {"prefix", counterexample_prefix(seq)};
  }
  const std::size_t shift = bounds.max_shift.value_or(increase_profile(sig).p + 8);
  return {"cut-search", counterexample_cut_search(seq, shift)};
}

const char* to_string(Verdict v) {
  return v == Verdict::AllMinimal ? "all-minimal" : "counterexample";
}

std::optional<std::uint64_t> least_non_minimal_serial(const SequencePtr& seq, std::uint64_t N) {
  return least_non_minimal_with(seq, N, [](const SequencePtr& s, std::span<const BigInt> v) {
    return serial::gzd_batch(s, v);
  });
}

std::optional<std::uint64_t> least_non_minimal(const SequencePtr& seq, std::uint64_t N) {
  return least_non_minimal_with(seq, N, [](const SequencePtr& s, std::span<const BigInt> v) {
    return parallel::gzd_batch(s, v);
  });
}

MinimalityReport verify_theorem(const SequencePtr& seq, std::uint64_t N,
                                const SearchBounds& bounds) {
  if (N < 1) throw std::invalid_argument("scan bound must be at least 1");
  const Signature& sig = seq->signature();
  MinimalityReport report{sig, N};
  report.least_n = least_non_minimal(seq, N);

  if (is_weakly_decreasing(sig)) {
    report.method = "sweep";
    if (report.least_n) {
      const auto table = min_summand_table(*seq, *report.least_n);
      report.verdict = Verdict::Counterexample;
      report.falsified = true;
      report.note = "weakly decreasing signature has a non-minimal gzd";
      report.witness = make_witness(min_summand_representation(seq, table, *report.least_n));
    }
    return report;
  }

  report.verdict = Verdict::Counterexample;
  try {
    auto found = counterexample(seq, bounds);
    report.method = found.method;
    report.witness = std::move(found.witness);
  } catch (const FalsificationError& e) {
    if (report.least_n) {
      const auto table = min_summand_table(*seq, *report.least_n);
      report.method = "sweep";
      report.witness = make_witness(min_summand_representation(seq, table, *report.least_n));
      report.note = std::string("constructor failed: ") + e.what();
    } else {
      report.verdict = Verdict::AllMinimal;
      report.falsified = true;
      report.note = e.what();
    }
  }
  return report;
}

const char* to_string(TwoSummandForm f) {
  switch (f) {
    case TwoSummandForm::Single:
      return "H[n+l1]";
    case TwoSummandForm::PairEll2:
      return "H[n+l1]+H[n-l2]";
    case TwoSummandForm::PairEll2Plus1:
      return "H[n+l1]+H[n-l2-1]";
  }
  return "?";
}

FormHistogram classify_two_summand_forms(const SequencePtr& seq, Index n_lo, Index n_hi) {
  require_c1_one(seq->signature());
  if (n_lo < 0 || n_lo > n_hi) throw std::invalid_argument("need 0 <= n_lo <= n_hi");
  const GrowthParams gp = growth_params(*seq);
  FormHistogram hist;
  hist.ell1 = gp.ell1;
  hist.ell2 = gp.ell2;
  hist.stable_from = n_lo;

  const auto gzds = parallel::gzd_batch(seq, doubled_terms(*seq, n_lo, n_hi));
  for (Index n = n_lo; n <= n_hi; ++n) {
    const Representation& g = gzds[static_cast<std::size_t>(n - n_lo)];
    if (g.summand_count() >= 3) {
      hist.three_plus.push_back(n);
      continue;
    }
    std::vector<Index> places;
    for (Index i = g.top_index(); i >= 0; --i) {
      for (BigInt d = g.digit(i); d > 0; --d) places.push_back(i);
    }
    std::optional<TwoSummandForm> form;
    if (places.size() == 1 && places[0] == n + gp.ell1) {
      form = TwoSummandForm::Single;
    } else if (places.size() == 2 && gp.ell2 && places[0] == n + gp.ell1) {
      if (places[1] == n - *gp.ell2) form = TwoSummandForm::PairEll2;
      if (places[1] == n - *gp.ell2 - 1) form = TwoSummandForm::PairEll2Plus1;
    }
    if (form) {
      ++hist.counts[*form];
    } else {
      hist.violations.push_back(n);
      hist.stable_from = n + 1;
    }
  }
  return hist;
}

}  // namespace zeck
