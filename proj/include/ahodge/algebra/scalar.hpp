/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>

#include "ahodge/algebra/polynomial.hpp"

namespace ahodge::algebra {

/// Element of Q(tau) in canonical form: num/den reduced, den monic.
/// Canonical form makes equality syntactic.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Raw {};
  RationalFunction(QPoly num, QPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  QPoly num_;
  QPoly den_;
};

/// Element of the exact field Q(pi)(i): a complex pair of rational
/// functions in the symbol pi.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : re_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) : re_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction re, RationalFunction im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar rational(long p, long q = 1);
  static Scalar pi();
  static Scalar i();

  const RationalFunction& re() const { return re_; }
  const RationalFunction& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_.is_polynomial() && re_.num().is_one(); }

  Scalar conj() const { return {re_, -im_}; }
  Scalar inverse() const;

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Rendering that parses back under the manifest scalar grammar.
  std::string to_string() const;

 private:
  RationalFunction re_;
  RationalFunction im_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline Scalar conj(const Scalar& s) { return s.conj(); }

}  // namespace ahodge::algebra
