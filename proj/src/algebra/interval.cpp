/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/algebra/interval.hpp"

#include <mpfr.h>

#include <algorithm>

#include "ahodge/error.hpp"

namespace ahodge::algebra {

namespace {

// Exact conversion of an MPFR value to a rational.
mpq_class to_rational(const mpfr_t x) {
  mpz_class mant;
  mpfr_exp_t exp = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  mpq_class q(mant);
  if (exp > 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
  } else if (exp < 0) {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
  }
  return q;
}

constexpr unsigned kMaxPrecisionBits = 1u << 16;

}  // namespace

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval pi_enclosure(unsigned bits) {
  mpfr_t lo, hi;
  mpfr_init2(lo, bits + 2);
  mpfr_init2(hi, bits + 2);
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  RationalInterval r{to_rational(lo), to_rational(hi)};
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

RationalInterval evaluate(const QPoly& p, const RationalInterval& t) {
  RationalInterval acc{0, 0};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + RationalInterval{*it, *it};
  return acc;
}

int sign_at_pi(const RationalFunction& r, unsigned bits) {
  if (r.is_zero()) return 0;
  for (unsigned b = std::max(bits, 16u); b <= kMaxPrecisionBits; b *= 2) {
    RationalInterval t = pi_enclosure(b);
    RationalInterval n = evaluate(r.num(), t);
    RationalInterval d = evaluate(r.den(), t);
    if (n.contains_zero() || d.contains_zero()) continue;
    return (n.positive() == d.positive()) ? 1 : -1;
  }
  throw ValidationError("sign of " + r.to_string() + " at pi not resolved within precision cap");
}

int real_sign(const Scalar& s, unsigned bits) {
  if (!s.is_real()) throw ValidationError("expected a real scalar, got " + s.to_string());
  return sign_at_pi(s.re(), bits);
}

double approximate(const RationalFunction& r) {
  RationalInterval t = pi_enclosure(64);
  RationalInterval n = evaluate(r.num(), t);
  RationalInterval d = evaluate(r.den(), t);
  return n.lo.get_d() / d.lo.get_d();
}

}  // namespace ahodge::algebra
