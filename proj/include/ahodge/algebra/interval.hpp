/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include "ahodge/algebra/polynomial.hpp"
#include "ahodge/algebra/scalar.hpp"

namespace ahodge::algebra {

/// Closed interval with exact rational endpoints.
struct RationalInterval {
  mpq_class lo;
  mpq_class hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);

/// Certified enclosure of pi of width at most 2^-bits (MPFR directed rounding).
RationalInterval pi_enclosure(unsigned bits);

RationalInterval evaluate(const QPoly& p, const RationalInterval& t);

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Sign (-1, 0, +1) of r(pi). Zero is decided exactly; nonzero signs are
/// certified by interval evaluation, doubling the precision from `bits`
/// until the enclosure excludes zero.
int sign_at_pi(const RationalFunction& r, unsigned bits = kDefaultPrecisionBits);

/// Sign of a Scalar known to be real; throws ValidationError otherwise.
int real_sign(const Scalar& s, unsigned bits = kDefaultPrecisionBits);

/// Rounded double value of the real part, for display only.
double approximate(const RationalFunction& r);

}  // namespace ahodge::algebra
