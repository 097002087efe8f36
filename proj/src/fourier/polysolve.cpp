/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/fourier/polysolve.hpp"

#include <algorithm>

#include "ahodge/algebra/matrix.hpp"

namespace ahodge::fourier {

using algebra::QPoly;

mpq_class evaluate(const QMPoly& p, const std::vector<long>& x) {
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms) {
    mpz_class t = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      mpz_class base = x[k];
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[k]));
      t *= pw;
    }
    sum += c * mpq_class(t);
  }
  return sum;
}

QPoly to_univariate(const QMPoly& p, int var) {
  std::vector<mpq_class> c(std::max(p.degree_in(var) + 1, 0));
  for (const auto& [e, v] : p.terms) c[e[var]] += v;
  return QPoly(std::move(c));
}

namespace {

// p(x = x0) as a dense polynomial in y with formal degree deg.
std::vector<mpq_class> specialize(const QMPoly& p, int x, long x0, int y, int deg) {
  std::vector<mpq_class> out(deg + 1);
  for (const auto& [e, c] : p.terms) {
    mpz_class pw;
    mpz_class base = x0;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[x]));
    out[e[y]] += c * mpq_class(pw);
  }
  return out;
}

mpq_class sylvester_det(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  const int size = m + n;
  algebra::Matrix<mpq_class> s(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = a[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = b[n - k];
  return algebra::determinant(s);
}

// Newton interpolation through (0, v0), (1, v1), ...
QPoly interpolate(const std::vector<mpq_class>& values) {
  std::vector<mpq_class> dd = values;
  const std::size_t n = dd.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / mpq_class(static_cast<long>(level));
  QPoly result;
  QPoly basis(1);
  for (std::size_t k = 0; k < n; ++k) {
    result += basis * dd[k];
    basis = basis * QPoly(std::vector<mpq_class>{mpq_class(-static_cast<long>(k)), 1});
  }
  return result;
}

// Integer values of variable `var` at common zeros, or nullopt.
std::optional<std::vector<long>> eliminate(const std::vector<QMPoly>& sys, int var, long cap) {
  const int other = 1 - var;
  std::vector<QPoly> eliminants;
  for (const auto& p : sys)
    if (p.degree_in(other) <= 0) eliminants.push_back(to_univariate(p, var));
  if (eliminants.empty()) {
    for (std::size_t a = 0; a < sys.size() && eliminants.empty(); ++a)
      for (std::size_t b = a + 1; b < sys.size(); ++b) {
        QPoly r = resultant(sys[a], sys[b], other);
        if (!r.is_zero()) {
          eliminants.push_back(r);
          break;
        }
      }
  }
  for (const auto& e : eliminants) {
    auto roots = integer_roots(e, cap);
    if (roots) return roots;
  }
  return std::nullopt;
}

}  // namespace

QPoly resultant(const QMPoly& p, const QMPoly& q, int var) {
  const int x = 1 - var;
  const int dp = p.degree_in(var), dq = q.degree_in(var);
  const int bound = dp * std::max(q.degree_in(x), 0) + dq * std::max(p.degree_in(x), 0);
  std::vector<mpq_class> values;
  for (long x0 = 0; x0 <= bound; ++x0)
    values.push_back(sylvester_det(specialize(p, x, x0, var, dp), specialize(q, x, x0, var, dq)));
  return interpolate(values);
}

std::optional<std::vector<long>> integer_roots(const QPoly& p, long cap) {
  const auto& c = p.coeffs();
  std::size_t v = 0;
  while (v < c.size() && c[v] == 0) ++v;
  std::vector<long> roots;
  if (v > 0) roots.push_back(0);
  std::vector<mpq_class> q(c.begin() + static_cast<long>(v), c.end());
  if (q.size() <= 1) return roots;
  // Cauchy: every root satisfies |x| < 1 + max |q_i / q_d|.
  mpq_class m = 0;
  for (std::size_t k = 0; k + 1 < q.size(); ++k) m = std::max(m, mpq_class(abs(q[k] / q.back())));
  mpz_class bound = 1 + m.get_num() / m.get_den();
  if (bound > cap) return std::nullopt;
  mpz_class den = 1;
  for (const auto& a : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
  mpz_class trailing = q[0].get_num() * (den / q[0].get_den());
  QPoly reduced{std::vector<mpq_class>(q)};
  const long b = bound.get_si();
  for (long x = 1; x <= b; ++x) {
    if (!mpz_divisible_ui_p(trailing.get_mpz_t(), static_cast<unsigned long>(x))) continue;
    if (reduced.eval(mpq_class(-x)) == 0) roots.push_back(-x);
    if (reduced.eval(mpq_class(x)) == 0) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::vector<std::vector<long>>> integer_solutions(const std::vector<QMPoly>& system, int nvars,
                                                                long cap) {
  std::vector<QMPoly> sys;
  for (const auto& p : system) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return std::vector<std::vector<long>>{};
    sys.push_back(p);
  }
  if (nvars == 0) return std::vector<std::vector<long>>{std::vector<long>{}};
  if (sys.empty() || nvars > 2) return std::nullopt;
  std::vector<std::vector<long>> out;
  if (nvars == 1) {
    auto roots = integer_roots(to_univariate(sys[0], 0), cap);
    if (!roots) return std::nullopt;
    for (long x : *roots) {
      std::vector<long> pt{x};
      if (std::all_of(sys.begin(), sys.end(), [&](const QMPoly& p) { return evaluate(p, pt) == 0; }))
        out.push_back(pt);
    }
    return out;
  }
  auto xs = eliminate(sys, 0, cap);
  if (!xs) return std::nullopt;
  auto ys = eliminate(sys, 1, cap);
  if (!ys) return std::nullopt;
  for (long x : *xs)
    for (long y : *ys) {
      std::vector<long> pt{x, y};
      if (std::all_of(sys.begin(), sys.end(), [&](const QMPoly& p) { return evaluate(p, pt) == 0; }))
        out.push_back(pt);
    }
  return out;
}

}  // namespace ahodge::fourier
