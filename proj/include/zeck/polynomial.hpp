#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/signature.hpp"

namespace zeck {

/// Dense integer polynomial, constant term first. The stored coefficient
/// list never ends in a zero; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(const BigInt& coeff, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t power) const;
  const BigInt& leading() const;

  long double eval(long double x) const;

  /// Descending-power rendering, e.g. "x^3 - x^2 - 2".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

struct DivRem {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// a = q*b + r with deg r < deg b. The divisor's leading coefficient must be
/// +1 or -1 so that the quotient stays integral; anything else throws
/// std::invalid_argument.
DivRem divrem(const IntPolynomial& a, const IntPolynomial& b);

bool divides(const IntPolynomial& divisor, const IntPolynomial& p);

/// x^t - c_1 x^{t-1} - ... - c_t.
IntPolynomial char_poly(const Signature& sig);

/// x^r - 2x^s + 1. Requires r > s >= 1.
IntPolynomial g_poly(int r, int s);

/// g(r, s) / (x^gcd(r,s) - 1), computed by exact division.
IntPolynomial h_poly(int r, int s);

/// Factorisation of h(r, s) into the pieces given by Schinzel's theorem on
/// trinomials x^r - 2x^s + 1: a single factor in general, two cubic-in-x^k
/// factors for (r, s) = (7k, 2k) and (7k, 5k). The product is checked
/// against h_poly before returning.
std::vector<IntPolynomial> schinzel_factors(int r, int s);

struct RootBracket {
  long double lo = 0;
  long double hi = 0;
  long double mid() const { return (lo + hi) / 2; }
  long double width() const { return hi - lo; }
};

/// Bisection for the largest real root of a polynomial with positive leading
/// coefficient that is negative at x = 1 (the characteristic polynomial of
/// any signature other than (1)). The bracket starts at (1, 1 + sum|a_i|].
/// Throws std::domain_error when p(1) >= 0.
RootBracket largest_real_root(const IntPolynomial& p, long double tol);

/// Sign-change scan over (lo, hi] followed by bisection. Roots of even
/// multiplicity are not detected.
std::vector<RootBracket> real_roots_in(const IntPolynomial& p, long double lo, long double hi,
                                       long double tol, std::size_t samples = 20000);

}  // namespace zeck
