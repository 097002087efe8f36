/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "ahodge/algebra/polynomial.hpp"

namespace ahodge::fourier {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with coefficients in an exact ring.
template <class C>
struct MPoly {
  int nvars = 0;
  std::map<Exponents, C> terms;

  MPoly() = default;
  explicit MPoly(int n) : nvars(n) {}
  static MPoly constant(int n, const C& c) {
    MPoly p(n);
    p.add(Exponents(n, 0), c);
    return p;
  }
  static MPoly variable(int n, int k, const C& c) {
    MPoly p(n);
    Exponents e(n, 0);
    e[k] = 1;
    p.add(e, c);
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  void add(const Exponents& e, const C& c) {
    if (c == C(0)) return;
    auto [it, ins] = terms.emplace(e, c);
    if (ins) return;
    it->second += c;
    if (it->second == C(0)) terms.erase(it);
  }
  int degree_in(int k) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e[k]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  bool is_constant() const {
    for (const auto& [e, c] : terms)
      for (int x : e)
        if (x != 0) return false;
    return true;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.terms) a.add(e, c);
    return a;
  }
  friend MPoly operator-(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.terms) a.add(e, -c);
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(std::max(a.nvars, b.nvars));
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        Exponents e(r.nvars, 0);
        for (int k = 0; k < r.nvars; ++k) e[k] = ea[k] + eb[k];
        r.add(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }
};

using QMPoly = MPoly<mpq_class>;

/// Value at an integer point.
mpq_class evaluate(const QMPoly& p, const std::vector<long>& x);

/// Resultant with respect to variable `var` of two bivariate polynomials,
/// as a univariate polynomial in the other variable. Computed by evaluating
/// the Sylvester determinant at integer points and interpolating.
algebra::QPoly resultant(const QMPoly& p, const QMPoly& q, int var);

/// Integer roots of a nonzero univariate polynomial, ascending. Empty
/// optional if the Cauchy bound exceeds `cap`. The zero polynomial is
/// rejected by the caller.
std::optional<std::vector<long>> integer_roots(const algebra::QPoly& p, long cap);

/// Restricts a polynomial in one variable of a bivariate ring to a QPoly.
algebra::QPoly to_univariate(const QMPoly& p, int var);

/// Integer common zeros of a polynomial system in at most two variables.
/// Empty optional means the search could not be completed (identically
/// vanishing elimination, root bound over the cap, or too many variables).
std::optional<std::vector<std::vector<long>>> integer_solutions(const std::vector<QMPoly>& system, int nvars,
                                                                long cap);

}  // namespace ahodge::fourier
