#include "zeck/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zeck {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& coeff, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

long double IntPolynomial::eval(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->convert_to<long double>();
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

DivRem divrem(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const BigInt& lead = b.leading();
  if (lead != 1 && lead != -1) {
    throw std::invalid_argument("divisor " + b.to_string() + " is not monic up to sign");
  }
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {IntPolynomial{}, a};

  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    BigInt factor = rem[static_cast<std::size_t>(k)] * lead;  // lead is its own inverse
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& p) {
  return divrem(p, divisor).remainder.is_zero();
}

IntPolynomial char_poly(const Signature& sig) {
  const std::size_t t = sig.depth();
  std::vector<BigInt> c(t + 1);
  c[t] = 1;
  for (std::size_t i = 1; i <= t; ++i) c[t - i] = -sig.c(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial g_poly(int r, int s) {
  if (s < 1 || r <= s) {
    throw std::invalid_argument("g(r, s) requires r > s >= 1, got (" + std::to_string(r) + ", " +
                                std::to_string(s) + ")");
  }
  return IntPolynomial::monomial(1, static_cast<std::size_t>(r)) -
         IntPolynomial::monomial(2, static_cast<std::size_t>(s)) + IntPolynomial{1};
}

namespace {

IntPolynomial x_pow_minus_one(int d) {
  return IntPolynomial::monomial(1, static_cast<std::size_t>(d)) - IntPolynomial{1};
}

}  // namespace

IntPolynomial h_poly(int r, int s) {
  IntPolynomial g = g_poly(r, s);
  DivRem qr = divrem(g, x_pow_minus_one(std::gcd(r, s)));
  if (!qr.remainder.is_zero()) {
    throw std::logic_error("x^gcd - 1 does not divide " + g.to_string());
  }
  return qr.quotient;
}

std::vector<IntPolynomial> schinzel_factors(int r, int s) {
  IntPolynomial h = h_poly(r, s);
  std::vector<IntPolynomial> factors;
  auto mono = [](int coeff, int power) {
    return IntPolynomial::monomial(coeff, static_cast<std::size_t>(power));
  };
  if (r % 7 == 0 && (7 * s == 2 * r || 7 * s == 5 * r)) {
    const int k = r / 7;
    if (7 * s == 2 * r) {
      factors.push_back(mono(1, 3 * k) + mono(1, 2 * k) - IntPolynomial{1});
      factors.push_back(mono(1, 3 * k) + mono(1, k) + IntPolynomial{1});
    } else {
      factors.push_back(mono(1, 3 * k) + mono(1, 2 * k) + IntPolynomial{1});
      factors.push_back(mono(1, 3 * k) - mono(1, k) - IntPolynomial{1});
    }
  } else {
    factors.push_back(h);
  }
  IntPolynomial product{1};
  for (const auto& f : factors) product = product * f;
  if (product != h) {
    throw std::logic_error("factor product does not reproduce h(" + std::to_string(r) + ", " +
                           std::to_string(s) + ")");
  }
  return factors;
}

RootBracket largest_real_root(const IntPolynomial& p, long double tol) {
  if (p.is_zero() || p.leading() <= 0) {
    throw std::domain_error("largest_real_root needs a positive leading coefficient");
  }
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  long double lo = 1;
  if (p.eval(lo) >= 0) {
    throw std::domain_error("polynomial " + p.to_string() + " is not negative at 1");
  }
  long double bound = 0;
  const long double lead = p.leading().convert_to<long double>();
  for (int k = 0; k < p.degree(); ++k) {
    bound += abs(p.coeffs()[static_cast<std::size_t>(k)]).convert_to<long double>() / lead;
  }
  long double hi = 1 + bound;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
    (p.eval(mid) < 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

std::vector<RootBracket> real_roots_in(const IntPolynomial& p, long double lo, long double hi,
                                       long double tol, std::size_t samples) {
  std::vector<RootBracket> roots;
  if (p.is_zero() || samples == 0) return roots;
  const long double step = (hi - lo) / static_cast<long double>(samples);
  long double x0 = lo;
  long double f0 = p.eval(x0);
  for (std::size_t i = 1; i <= samples; ++i) {
    long double x1 = lo + step * static_cast<long double>(i);
    long double f1 = p.eval(x1);
    if (f1 == 0) {
      roots.push_back({x1, x1});
    } else if (f0 != 0 && (f0 < 0) != (f1 < 0)) {
      long double a = x0, b = x1;
      const bool neg_left = f0 < 0;
      for (int iter = 0; iter < 200 && b - a > tol; ++iter) {
        long double m = (a + b) / 2;
        if (m <= a || m >= b) break;
        ((p.eval(m) < 0) == neg_left ? a : b) = m;
      }
      roots.push_back({a, b});
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

}  // namespace zeck
