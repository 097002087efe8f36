/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ahodge/error.hpp"

namespace ahodge::algebra {

QPoly::QPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

QPoly QPoly::tau() { return monomial(1, 1); }

QPoly QPoly::monomial(const mpq_class& c, int degree) {
  QPoly p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, mpq_class(0));
  p.c_[degree] = c;
  return p;
}

bool QPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

mpq_class QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  QPoly p;
  p.c_ = std::move(r);
  p.trim();
  return p;
}

QPoly QPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  mpq_class inv = 1 / leading();
  return *this * inv;
}

mpq_class QPoly::eval(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string QPoly::to_string(const std::string& symbol) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& q = c_[k];
    if (q == 0) continue;
    mpq_class mag = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << symbol;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<mpq_class> rem = a.coeffs();
  std::vector<mpq_class> quo(a.degree() - b.degree() + 1, mpq_class(0));
  const int db = b.degree();
  mpq_class lead_inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    mpq_class f = rem[k] * lead_inv;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db > 0 ? db : 0);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a.monic();
  QPoly y = b.monic();
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace ahodge::algebra
