#include "zeck/hankel.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace zeck {

using Rational = boost::multiprecision::cpp_rational;

HankelMatrix::HankelMatrix(const RecurrenceSequence& seq, Index n, std::size_t k)
    : start_(n), size_(k + 1) {
  for (std::size_t i = 0; i <= 2 * k; ++i) window_.push_back(seq.term(n + static_cast<Index>(i)));
}

std::vector<std::vector<BigInt>> HankelMatrix::rows() const {
  std::vector<std::vector<BigInt>> m(size_, std::vector<BigInt>(size_));
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) m[i][j] = entry(i, j);
  }
  return m;
}

BigInt HankelMatrix::determinant() const { return bareiss_determinant(rows()); }

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt hankel_det(const RecurrenceSequence& seq, Index n, std::size_t k) {
  return HankelMatrix(seq, n, k).determinant();
}

namespace {

// Solves a x = b exactly; nullopt when a is singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a,
                                           std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

bool recurrence_holds(std::span<const BigInt> terms, const std::vector<BigInt>& d) {
  const std::size_t k = d.size();
  for (std::size_t m = k; m < terms.size(); ++m) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += d[i - 1] * terms[m - i];
    if (acc != terms[m]) return false;
  }
  return true;
}

IntPolynomial recurrence_poly(const std::vector<BigInt>& d) {
  const std::size_t k = d.size();
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = 1;
  for (std::size_t i = 1; i <= k; ++i) coeffs[k - i] = -d[i - 1];
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial minimal_poly(std::span<const BigInt> terms, std::size_t max_degree) {
  if (std::all_of(terms.begin(), terms.end(), [](const BigInt& v) { return v == 0; })) {
    return IntPolynomial{1};
  }
  for (std::size_t k = 1; k <= max_degree && 2 * k <= terms.size(); ++k) {
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    std::vector<Rational> b(k);
    for (std::size_t row = 0; row < k; ++row) {
      for (std::size_t i = 1; i <= k; ++i) a[row][i - 1] = Rational(terms[k + row - i]);
      b[row] = Rational(terms[k + row]);
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) continue;
    std::vector<BigInt> d;
    bool integral = true;
    for (const auto& q : *x) {
      if (denominator(q) != 1) {
        integral = false;
        break;
      }
      d.push_back(numerator(q));
    }
    if (integral && recurrence_holds(terms, d)) return recurrence_poly(d);
  }
  throw std::domain_error("no recurrence of degree <= " + std::to_string(max_degree) +
                          " fits " + std::to_string(terms.size()) + " terms");
}

IntPolynomial minimal_poly(const RecurrenceSequence& seq, std::size_t max_degree,
                           std::size_t witness_terms, std::optional<Index> start) {
  const Index first = start.value_or(seq.first_index());
  std::vector<BigInt> terms;
  terms.reserve(witness_terms);
  for (std::size_t i = 0; i < witness_terms; ++i) {
    terms.push_back(seq.term(first + static_cast<Index>(i)));
  }
  return minimal_poly(terms, max_degree);
}

namespace {

DivisibilityReport scan_report(const Signature& sig, int r_max,
                               std::vector<DivisibilityHit> hits) {
  DivisibilityReport report;
  report.r_max = r_max;
  report.hits = std::move(hits);
  const int t = static_cast<int>(sig.depth());
  if (t == 1 && sig.c(1) == 1) {
    report.expects_every_pair = true;
    const std::size_t pairs = r_max < 2 ? 0 : static_cast<std::size_t>(r_max) * (r_max - 1) / 2;
    report.matches_expectation = report.hits.size() == pairs;
    return report;
  }
  if (is_all_ones(sig) && t + 1 <= r_max) report.expected = DivisibilityHit{t + 1, t};
  if (report.expected) {
    report.matches_expectation = report.hits.size() == 1 && report.hits[0] == *report.expected;
  } else {
    report.matches_expectation = report.hits.empty();
  }
  return report;
}

}  // namespace

DivisibilityReport char_divides_g_scan(const Signature& sig, int r_max) {
  return scan_report(sig, r_max, parallel::g_divisibility_hits(char_poly(sig), r_max));
}

DivisibilityReport char_divides_g_scan_serial(const Signature& sig, int r_max) {
  return scan_report(sig, r_max, serial::g_divisibility_hits(char_poly(sig), r_max));
}

bool distinct_positive_roots(int r, int s, long double separation) {
  if (!(r > s && s >= 1)) throw std::invalid_argument("need r > s >= 1");
  const IntPolynomial shifted = IntPolynomial::monomial(1, static_cast<std::size_t>(r - 1)) -
                                IntPolynomial::monomial(2, static_cast<std::size_t>(s - 1)) +
                                IntPolynomial{1};
  const IntPolynomial power = IntPolynomial::monomial(1, static_cast<std::size_t>(r - s)) -
                              IntPolynomial{2};
  const long double lo = 1.0L + 1e-6L;
  const long double tol = separation / 100;
  std::vector<std::vector<RootBracket>> roots = {real_roots_in(g_poly(r, s), lo, 3, tol),
                                                 real_roots_in(shifted, lo, 3, tol),
                                                 real_roots_in(power, lo, 3, tol)};
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      for (const auto& x : roots[a]) {
        for (const auto& y : roots[b]) {
          if (std::fabs(x.mid() - y.mid()) < separation) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace zeck
