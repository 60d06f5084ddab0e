#include "zeck/gzd.hpp"

#include <algorithm>
#include <string>

namespace zeck {

const char* to_string(StepKind kind) { return kind == StepKind::Borrow ? "borrow" : "carry"; }

std::int64_t delta_summands(const StepTrace& trace) {
  std::int64_t total = 0;
  for (const auto& s : trace.steps) total += s.delta;
  return total;
}

namespace {

// FNV-1a over the rendered digits.
std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::uint64_t snapshot_hash(const Representation& r) { return fnv1a(r.to_string()); }

namespace {

void require_gzd_capable(const Signature& sig) {
  if (sig.depth() == 1 && sig.c(1) == 1) {
    throw std::domain_error("sigma = (1) has no allowable block other than [0]");
  }
}

class TraceRecorder {
 public:
  TraceRecorder(Representation start, const TraceOptions& opts)
      : current_(std::move(start)), opts_(opts), target_(current_.value()) {
    trace_.initial_summands = current_.summand_count();
  }

  const Representation& current() const { return current_; }

  void apply(StepKind kind, Index index, bool chained, const LegalityReport* before) {
    if (trace_.steps.size() >= opts_.step_limit) {
      throw InvariantError("step limit " + std::to_string(opts_.step_limit) + " exceeded from " +
                           current_.to_string());
    }
    Representation next = kind == StepKind::Borrow ? borrow(current_, index)
                                                   : carry(current_, index);
    accept(kind, index, chained, before, std::move(next));
  }

  void accept(StepKind kind, Index index, bool chained, const LegalityReport* before,
              Representation next) {
    if (next.value() != target_) {
      throw InvariantError(std::string(to_string(kind)) + " at " + std::to_string(index) +
                           " changed the value of " + current_.to_string());
    }
    Step st;
    st.kind = kind;
    st.index = index;
    const std::int64_t d = borrow_delta(current_.signature(), index);
    st.delta = kind == StepKind::Borrow ? d : -d;
    st.chained = chained;
    if (before) {
      st.mli_before = before->mli;
      st.sli_before = before->sli;
      st.coi_before = before->coi;
      st.rei_before = before->rei;
    }
    st.snapshot_hash = snapshot_hash(next);
    if (trace_.steps.size() < opts_.snapshot_depth) st.snapshot = next;
    trace_.steps.push_back(std::move(st));
    current_ = std::move(next);
  }

  TracedRun finish() && {
    trace_.final_summands = current_.summand_count();
    return {std::move(current_), std::move(trace_)};
  }

 private:
  Representation current_;
  const TraceOptions& opts_;
  BigInt target_;
  StepTrace trace_;
};

}  // namespace

TracedRun to_gzd(const Representation& r, const TraceOptions& opts) {
  require_gzd_capable(r.signature());
  const auto t = static_cast<Index>(r.signature().depth());
  TraceRecorder rec(r, opts);
  LegalityReport rep = legality(rec.current());
  Index prev_sli = rep.sli;

  while (!rep.is_gzd()) {
    if (able_to_carry(rec.current(), rep.mli)) {
      Index target = rep.mli;
      rec.apply(StepKind::Carry, target, false, &rep);
      // Keep carrying while the block just completed is exactly c_1..c_t.
      while (true) {
        LegalityReport after = legality(rec.current());
        if (after.violation_by_equality && after.mli == target + t) {
          target = after.mli;
          rec.apply(StepKind::Carry, target, true, &after);
          continue;
        }
        rep = std::move(after);
        break;
      }
    } else {
      rec.apply(StepKind::Borrow, *rep.rei, false, &rep);
      rep = legality(rec.current());
    }
    if (rep.sli > prev_sli) {
      throw InvariantError("s.l.i. rose from " + std::to_string(prev_sli) + " to " +
                           std::to_string(rep.sli) + " at " + rec.current().to_string());
    }
    prev_sli = rep.sli;
  }
  return std::move(rec).finish();
}

Representation gzd_of(const BigInt& n, const SequencePtr& seq) {
  if (n < 0) throw std::invalid_argument("gzd_of needs a non-negative integer");
  const Signature& sig = seq->signature();
  require_gzd_capable(sig);
  if (n == 0) return Representation::from_lsd(seq, {BigInt(0)});

  const std::size_t t = sig.depth();
  // need[p]: positions required to close a block that is open at position p,
  // i.e. up to and including the first q >= p with c_q >= 1.
  std::vector<Index> need(t + 2, 0);
  for (std::size_t p = t; p >= 1; --p) {
    need[p] = sig.c(p) >= 1 ? 1 : need[p + 1] + 1;
  }

  const Index top = seq->largest_index_at_most(n);
  const std::vector<BigInt> h = seq->terms(top);
  std::vector<BigInt> lsd(static_cast<std::size_t>(top) + 1);
  BigInt rem = n;
  std::size_t p = 1;
  for (Index pos = top; pos >= 0; --pos) {
    const std::int64_t cp = sig.c(p);
    const std::int64_t cap = p < t ? cp : cp - 1;
    const BigInt fit = rem / h[static_cast<std::size_t>(pos)];
    std::int64_t d = fit < cap ? static_cast<std::int64_t>(fit) : cap;
    if (p < t && d == cp && need[p + 1] > pos) --d;
    if (d < 0) throw std::logic_error("gzd construction reached an unclosable block");
    lsd[static_cast<std::size_t>(pos)] = d;
    rem -= d * h[static_cast<std::size_t>(pos)];
    p = (p < t && d == cp) ? p + 1 : 1;
  }
  if (rem != 0 || p != 1) {
    throw std::logic_error("greedy gzd construction left remainder " + rem.str() + " for " +
                           n.str());
  }
  return Representation::from_lsd(seq, std::move(lsd));
}

TracedRun repair_negatives(const SignedRepresentation& r, const TraceOptions& opts) {
  const Signature& sig = r.signature();
  const std::int64_t c1 = sig.c(1);
  const auto& lsd = r.lsd();
  for (std::size_t i = 0; i < lsd.size(); ++i) {
    if (lsd[i] >= 0) continue;
    if (-lsd[i] > c1) {
      throw RepresentationError("entry " + lsd[i].str() + " at index " + std::to_string(i) +
                                " is below -c_1");
    }
    bool positive_left = std::any_of(lsd.begin() + static_cast<std::ptrdiff_t>(i) + 1, lsd.end(),
                                     [](const BigInt& d) { return d > 0; });
    if (!positive_left) {
      throw RepresentationError("no positive entry left of the negative entry at index " +
                                std::to_string(i));
    }
  }

  SignedRepresentation cur = r;
  const BigInt target = cur.value();
  StepTrace trace;
  trace.initial_summands = cur.summand_count();
  while (cur.has_negative()) {
    if (trace.steps.size() >= opts.step_limit) {
      throw InvariantError("step limit exceeded while repairing " + r.to_string());
    }
    Index neg = -1;
    for (Index i = cur.top_index(); i >= 0; --i) {
      if (cur.digit(i) < 0) {
        neg = i;
        break;
      }
    }
    Index source = -1;
    for (Index i = neg + 1; i <= cur.top_index(); ++i) {
      if (cur.digit(i) > 0) {
        source = i;
        break;
      }
    }
    if (source < 0) {
      throw RepresentationError("no positive entry left of the negative entry at index " +
                                std::to_string(neg) + " in " + cur.to_string());
    }
    cur = cur.borrow(source);
    if (cur.value() != target) throw InvariantError("repair borrow changed the value");
    Step st;
    st.kind = StepKind::Borrow;
    st.index = source;
    st.delta = borrow_delta(sig, source);
    st.snapshot_hash = fnv1a(cur.to_string());
    if (!cur.has_negative() && trace.steps.size() < opts.snapshot_depth) {
      st.snapshot = cur.to_representation();
    }
    trace.steps.push_back(std::move(st));
  }
  Representation result = cur.to_representation();
  trace.final_summands = result.summand_count();
  return {std::move(result), std::move(trace)};
}

}  // namespace zeck
