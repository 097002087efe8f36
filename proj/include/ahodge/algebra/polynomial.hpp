/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ahodge::algebra {

/// Dense univariate polynomial over Q in the transcendental symbol tau.
/// Coefficients are stored low to high with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  QPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<mpq_class> coeffs);

  static QPoly tau();
  static QPoly monomial(const mpq_class& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int k) const;
  const mpq_class& leading() const { return c_.back(); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const mpq_class& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  QPoly monic() const;
  mpq_class eval(const mpq_class& t) const;

  /// Grammar-compatible rendering, e.g. `3/2*pi^2 - 1`.
  std::string to_string(const std::string& symbol = "pi") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Euclidean division; throws DivisionByZero on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero only if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

}  // namespace ahodge::algebra
