#include "zeck/sequence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zeck/polynomial.hpp"

namespace zeck {

RecurrenceSequence::RecurrenceSequence(Signature sig) : sig_(std::move(sig)) {
  memo_.assign(sig_.depth() - 1, BigInt(0));
  memo_.emplace_back(1);
}

RecurrenceSequence::RecurrenceSequence(const RecurrenceSequence& other) : sig_(other.sig_) {
  std::lock_guard lock(other.mu_);
  memo_ = other.memo_;
}

RecurrenceSequence& RecurrenceSequence::operator=(const RecurrenceSequence& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mu_, other.mu_);
  sig_ = other.sig_;
  memo_ = other.memo_;
  return *this;
}

void RecurrenceSequence::extend_locked(Index n) const {
  const std::size_t t = sig_.depth();
  const auto want = static_cast<std::size_t>(n + static_cast<Index>(t) - 1);
  while (memo_.size() <= want) {
    BigInt next = 0;
    const std::size_t pos = memo_.size();
    for (std::size_t j = 1; j <= t; ++j) {
      if (sig_.c(j) != 0) next += sig_.c(j) * memo_[pos - j];
    }
    memo_.push_back(std::move(next));
  }
}

BigInt RecurrenceSequence::term(Index n) const {
  if (n < first_index()) {
    throw std::out_of_range("index " + std::to_string(n) + " is below " +
                            std::to_string(first_index()));
  }
  std::lock_guard lock(mu_);
  extend_locked(n);
  return memo_[static_cast<std::size_t>(n - first_index())];
}

std::vector<BigInt> RecurrenceSequence::terms(Index hi) const {
  std::vector<BigInt> out;
  if (hi < 0) return out;
  std::lock_guard lock(mu_);
  extend_locked(hi);
  const auto base = static_cast<std::size_t>(-first_index());
  out.assign(memo_.begin() + static_cast<std::ptrdiff_t>(base),
             memo_.begin() + static_cast<std::ptrdiff_t>(base + static_cast<std::size_t>(hi) + 1));
  return out;
}

std::vector<std::pair<Index, BigInt>> RecurrenceSequence::terms_up_to(const BigInt& bound) const {
  if (sig_.depth() == 1 && sig_.c(1) == 1) {
    throw std::domain_error("every term of sigma = (1) equals 1; the list would be infinite");
  }
  std::vector<std::pair<Index, BigInt>> out;
  for (Index m = 0;; ++m) {
    BigInt h = term(m);
    if (h > bound) break;
    out.emplace_back(m, std::move(h));
  }
  return out;
}

Index RecurrenceSequence::largest_index_at_most(const BigInt& value) const {
  if (value < 1) return -1;
  if (sig_.depth() == 1 && sig_.c(1) == 1) {
    throw std::domain_error("every term of sigma = (1) equals 1; no largest index exists");
  }
  // Terms are non-decreasing for n >= 0 since c_1 >= 1.
  Index m = 0;
  while (term(m + 1) <= value) ++m;
  return m;
}

namespace {

/// floor(x), or the nearest integer when x sits within `window` of one.
int floor_or_nearest(long double x, long double window, bool& ambiguous) {
  const long double nearest = std::round(x);
  ambiguous = std::fabs(x - nearest) <= window;
  return static_cast<int>(ambiguous ? nearest : std::floor(x));
}

}  // namespace

GrowthParams growth_params(const RecurrenceSequence& seq, long double tol) {
  const Signature& sig = seq.signature();
  if (sig.total() < 2) {
    throw std::domain_error("sigma = (1) has beta = 1; log base beta is undefined");
  }
  RootBracket root = largest_real_root(char_poly(sig), tol);
  GrowthParams gp;
  gp.beta_lo = root.lo;
  gp.beta_hi = root.hi;
  gp.beta = root.mid();

  const long double log_beta = std::log(gp.beta);
  // Relative error of a logarithm taken from the bracket midpoint, widened by
  // the caller's tolerance.
  const long double window = std::max(tol, root.width() / (gp.beta * log_beta)) * 4;

  gp.ell1 = floor_or_nearest(std::log(2.0L) / log_beta, window, gp.ell1_ambiguous);
  const long double rest = 2 - std::pow(gp.beta, static_cast<long double>(gp.ell1));
  if (rest > window) {
    bool amb = false;
    gp.ell2 = floor_or_nearest(-std::log(rest) / log_beta, window, amb);
    gp.ell2_ambiguous = amb;
  }
  return gp;
}

}  // namespace zeck
