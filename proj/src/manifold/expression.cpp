/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/manifold/expression.hpp"

#include <cctype>

#include "ahodge/error.hpp"

namespace ahodge::manifold {

using algebra::Form;
using algebra::Mask;
using algebra::Scalar;

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Bindings& params, int n, int line, int col)
      : s_(text), params_(params), n_(n), line_(line), col_(col) {}

  Value run() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Value v = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_ + static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value scalar_value(const Scalar& s) const { return {Form::constant(n_, s), Frame::None}; }

  static bool is_scalar(const Value& v) {
    for (const auto& [m, c] : v.form.terms())
      if (m != 0) return false;
    return true;
  }

  static Scalar as_scalar(const Value& v) { return v.form.coeff(0); }

  Frame merge(Frame a, Frame b) {
    if (a == Frame::None) return b;
    if (b == Frame::None || a == b) return a;
    fail("expression mixes the e and phi coframes");
  }

  Value expr() {
    Value acc;
    bool neg = false;
    skip();
    if (accept('+')) {
    } else if (accept('-')) {
      neg = true;
    }
    acc = term();
    if (neg) acc.form = -acc.form;
    while (true) {
      if (accept('+')) {
        Value t = term();
        acc.frame = merge(acc.frame, t.frame);
        acc.form += t.form;
      } else if (accept('-')) {
        Value t = term();
        acc.frame = merge(acc.frame, t.frame);
        acc.form -= t.form;
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      if (accept('*')) {
        Value f = unary();
        acc.frame = merge(acc.frame, f.frame);
        acc.form = algebra::wedge(acc.form, f.form);
      } else if (accept('/')) {
        std::size_t at = pos_;
        Value f = unary();
        if (!is_scalar(f)) {
          pos_ = at;
          fail("division by a form");
        }
        Scalar d = as_scalar(f);
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc.form = d.inverse() * acc.form;
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      v.form = -v.form;
      return v;
    }
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept('^')) return base;
    skip();
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (!is_scalar(base)) fail("power of a form");
    long k = std::stol(std::string(s_.substr(start, pos_ - start)));
    Scalar b = as_scalar(base);
    if (neg) {
      if (b.is_zero()) fail("division by zero");
      b = b.inverse();
    }
    Scalar r(1);
    for (long j = 0; j < k; ++j) r = r * b;
    return scalar_value(r);
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  Value number() {
    std::size_t start = pos_;
    std::string digits;
    long scale = 0;
    bool dot = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++scale;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (long k = 0; k < scale; ++k) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return scalar_value(Scalar(q));
  }

  Value identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string id(s_.substr(start, pos_ - start));
    if (id == "pi") return scalar_value(Scalar::pi());
    if (id == "i") return scalar_value(Scalar::i());
    auto it = params_.find(id);
    if (it != params_.end()) return scalar_value(it->second);
    if (id.size() > 1 && id[0] == 'e' && all_digits(id, 1)) return real_monomial(id, start);
    if (id.size() > 3 && id.compare(0, 3, "phi") == 0) return complex_monomial(id, start);
    pos_ = start;
    fail("unknown identifier '" + id + "'");
  }

  static bool all_digits(const std::string& s, std::size_t from) {
    for (std::size_t k = from; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  }

  Value real_monomial(const std::string& id, std::size_t start) {
    std::vector<int> word;
    for (std::size_t k = 1; k < id.size(); ++k) {
      int idx = id[k] - '0';
      if (idx < 1 || idx > 2 * n_) {
        pos_ = start;
        fail("index out of range in '" + id + "'");
      }
      word.push_back(idx - 1);
    }
    auto [sign, mask] = algebra::sort_word(word);
    return {Form::monomial(n_, mask, Scalar(sign)), Frame::E};
  }

  Value complex_monomial(const std::string& id, std::size_t start) {
    std::vector<int> word;
    for (std::size_t k = 3; k < id.size(); ++k) {
      char c = id[k];
      int idx = c - '0';
      if (!std::isdigit(static_cast<unsigned char>(c)) || idx < 1 || idx > n_) {
        pos_ = start;
        fail("malformed complex monomial '" + id + "'");
      }
      bool bar = k + 1 < id.size() && id[k + 1] == 'b';
      if (bar) ++k;
      word.push_back(bar ? n_ + idx - 1 : idx - 1);
    }
    auto [sign, mask] = algebra::sort_word(word);
    return {Form::monomial(n_, mask, Scalar(sign)), Frame::Phi};
  }

  std::string_view s_;
  const Bindings& params_;
  int n_;
  int line_;
  int col_;
  std::size_t pos_ = 0;
};

}  // namespace

Value parse_expression(std::string_view text, const Bindings& params, int n, int line, int column_offset) {
  return Parser(text, params, n, line, column_offset).run();
}

Scalar parse_scalar(std::string_view text, const Bindings& params, int line, int column_offset) {
  Value v = parse_expression(text, params, algebra::kMaxComplexDim, line, column_offset);
  for (const auto& [m, c] : v.form.terms())
    if (m != 0) throw ParseError("expected a scalar, got a form", line, column_offset + 1);
  return v.form.coeff(0);
}

}  // namespace ahodge::manifold
