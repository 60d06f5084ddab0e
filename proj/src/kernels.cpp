#include "zeck/kernels.hpp"

#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeck/gzd.hpp"

namespace zeck {

std::vector<BigInt> iota_values(std::uint64_t n) {
  std::vector<BigInt> out;
  out.reserve(n + 1);
  for (std::uint64_t v = 0; v <= n; ++v) out.emplace_back(v);
  return out;
}

namespace {

// Extends the memo table once so workers only read under the lock.
void warm(const SequencePtr& seq, std::span<const BigInt> values) {
  BigInt largest = 0;
  for (const auto& v : values) {
    if (v > largest) largest = v;
  }
  if (largest >= 1) seq->term(seq->largest_index_at_most(largest) + 1);
}

std::vector<std::pair<int, int>> pairs_up_to(int r_max) {
  std::vector<std::pair<int, int>> pairs;
  for (int r = 2; r <= r_max; ++r) {
    for (int s = 1; s < r; ++s) pairs.emplace_back(r, s);
  }
  return pairs;
}

}  // namespace

namespace serial {

std::vector<Representation> gzd_batch(const SequencePtr& seq, std::span<const BigInt> values) {
  std::vector<Representation> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(gzd_of(v, seq));
  return out;
}

std::vector<DivisibilityHit> g_divisibility_hits(const IntPolynomial& f, int r_max) {
  std::vector<DivisibilityHit> hits;
  for (auto [r, s] : pairs_up_to(r_max)) {
    if (divides(f, g_poly(r, s))) hits.push_back({r, s});
  }
  return hits;
}

}  // namespace serial

namespace parallel {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Representation> gzd_batch(const SequencePtr& seq, std::span<const BigInt> values) {
  warm(seq, values);
  std::vector<std::optional<Representation>> slots(values.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(values.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = gzd_of(values[static_cast<std::size_t>(i)], seq);
    } catch (...) {
#pragma omp critical(zeck_gzd_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Representation> out;
  out.reserve(values.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<DivisibilityHit> g_divisibility_hits(const IntPolynomial& f, int r_max) {
  const auto pairs = pairs_up_to(r_max);
  std::vector<char> hit(pairs.size(), 0);
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    auto [r, s] = pairs[static_cast<std::size_t>(i)];
    hit[static_cast<std::size_t>(i)] = divides(f, g_poly(r, s)) ? 1 : 0;
  }
  std::vector<DivisibilityHit> hits;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (hit[i]) hits.push_back({pairs[i].first, pairs[i].second});
  }
  return hits;
}

}  // namespace parallel

}  // namespace zeck
