/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/algebra/scalar.hpp"

#include "ahodge/error.hpp"

namespace ahodge::algebra {

RationalFunction::RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (den_.leading() != 1) {
    mpq_class inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Raw{}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return {a.num_ + b.num_, QPoly(1), RationalFunction::Raw{}};
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return {a.num_ * b.num_, QPoly(1), RationalFunction::Raw{}};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return {den_, num_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw DivisionByZero();
  mpq_class r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::pi() { return Scalar(RationalFunction(QPoly::tau())); }

Scalar Scalar::i() { return Scalar(RationalFunction(), RationalFunction(1)); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (im_.is_zero()) return Scalar(re_.inverse());
  RationalFunction norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ = re_ + o.re_;
  im_ = im_ + o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ = re_ - o.re_;
  im_ = im_ - o.im_;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ * b.re_);
  if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  auto paren = [](const RationalFunction& r) {
    std::string s = r.to_string();
    bool atomic = r.is_polynomial() && r.num().is_constant() && s.find('/') == std::string::npos;
    if (!atomic) return "(" + s + ")";
    return s;
  };
  std::string out;
  if (!re_.is_zero()) out = re_.to_string();
  if (im_.is_zero()) return out;
  std::string imag;
  if (im_.is_polynomial() && im_.num().is_constant() && im_.num().leading() == 1) {
    imag = "i";
  } else if (im_.is_polynomial() && im_.num().is_constant() && im_.num().leading() == -1) {
    imag = "-i";
  } else {
    imag = paren(im_) + "*i";
  }
  if (out.empty()) return imag;
  if (imag[0] == '-') return out + " - " + imag.substr(1);
  return out + " + " + imag;
}

}  // namespace ahodge::algebra
