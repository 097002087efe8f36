/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/fourier/modes.hpp"

#include <algorithm>

#include "ahodge/error.hpp"
#include "ahodge/fourier/polysolve.hpp"
#include "ahodge/manifold/differential.hpp"

namespace ahodge::fourier {

using algebra::Form;
using algebra::Mask;
using algebra::QPoly;
using algebra::RationalFunction;
using algebra::Scalar;
using algebra::ScalarMatrix;
using pdesolve::Status;

Scalar Affine::eval(const ModeVector& m) const {
  Scalar v = s0;
  for (std::size_t j = 0; j < s.size() && j < m.size(); ++j)
    if (m[j] != 0) v += s[j] * Scalar(m[j]);
  return v;
}

bool Affine::is_zero() const {
  return s0.is_zero() && std::all_of(s.begin(), s.end(), [](const Scalar& x) { return x.is_zero(); });
}

namespace {

bool is_zero_mode(const ModeVector& m) {
  return std::all_of(m.begin(), m.end(), [](long x) { return x == 0; });
}

using SPoly = MPoly<Scalar>;

SPoly to_poly(const Affine& a, int r) {
  SPoly p = SPoly::constant(r, a.s0);
  for (int j = 0; j < r; ++j) p = p + SPoly::variable(r, j, a.s[j]);
  return p;
}

// Laplace expansion along the first row.
SPoly determinant(const std::vector<std::vector<SPoly>>& m, int r) {
  const std::size_t k = m.size();
  if (k == 0) return SPoly::constant(r, Scalar(1));
  if (k == 1) return m[0][0];
  SPoly out(r);
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<SPoly>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<SPoly> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    SPoly term = m[0][c] * determinant(minor, r);
    out = c % 2 ? out - term : out + term;
  }
  return out;
}

QPoly lcm(const QPoly& a, const QPoly& b) { return divmod(a * b, gcd(a, b)).first.monic(); }

// Real polynomial with coefficients in Q(pi) -> its pi-graded pieces over Q.
void split_by_pi(const std::map<Exponents, RationalFunction>& coeffs, int r, std::vector<QMPoly>& out) {
  if (coeffs.empty()) return;
  QPoly den(1);
  for (const auto& [e, c] : coeffs) den = lcm(den, c.den());
  std::map<int, QMPoly> graded;
  for (const auto& [e, c] : coeffs) {
    QPoly num = c.num() * divmod(den, c.den()).first;
    for (int k = 0; k <= num.degree(); ++k) {
      auto [it, ins] = graded.emplace(k, QMPoly(r));
      it->second.add(e, num.coeff(k));
    }
  }
  for (auto& [k, p] : graded)
    if (!p.is_zero()) out.push_back(std::move(p));
}

void split_scalar_poly(const SPoly& p, int r, std::vector<QMPoly>& out) {
  std::map<Exponents, RationalFunction> re, im;
  for (const auto& [e, c] : p.terms) {
    if (!c.re().is_zero()) re[e] = c.re();
    if (!c.im().is_zero()) im[e] = c.im();
  }
  split_by_pi(re, r, out);
  split_by_pi(im, r, out);
}

// All k-subsets of {0..n-1} in lexicographic order.
void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::string mode_exponent(const ModeVector& m, const std::vector<std::string>& coords, bool ascii) {
  std::string out;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    long v = m[j];
    std::string name = j < coords.size() ? coords[j] : "t" + std::to_string(j + 1);
    std::string mag = std::labs(v) == 1 ? "" : std::to_string(std::labs(v)) + (ascii ? "*" : "");
    if (out.empty())
      out = (v < 0 ? "-" : "") + mag + name;
    else
      out += (v < 0 ? " - " : " + ") + mag + name;
  }
  return out;
}

}  // namespace

std::vector<std::size_t> ModeMatrix::active_columns(const ModeVector& m) const {
  const bool zero = is_zero_mode(m);
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < unknowns.size(); ++c)
    if (zero || !constant_column[c]) cols.push_back(c);
  return cols;
}

ScalarMatrix ModeMatrix::eval(const ModeVector& m) const {
  auto cols = active_columns(m);
  ScalarMatrix out(rows, cols.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = at(r, cols[c]).eval(m);
  return out;
}

ModeMatrix mode_matrix(const pdesolve::ReducedSystem& rs, const manifold::ManifoldSpec& spec) {
  ModeMatrix mm;
  mm.rank = spec.fibration.rank;
  std::vector<int> column(rs.unknowns.size(), -1);
  for (std::size_t f = 0; f < rs.unknowns.size(); ++f) {
    if (rs.status[f] == Status::Free)
      throw UndeterminedUnknowns("unknown " + rs.names[f] + " is neither base-only nor constant");
    if (rs.status[f] == Status::Zero) continue;
    column[f] = static_cast<int>(mm.unknowns.size());
    mm.unknowns.push_back(static_cast<int>(f));
    mm.constant_column.push_back(rs.status[f] == Status::Constant);
  }
  mm.rows = rs.equations.size();
  Affine zero{Scalar(), std::vector<Scalar>(mm.rank)};
  mm.entries.assign(mm.rows * mm.unknowns.size(), zero);
  for (std::size_t r = 0; r < rs.equations.size(); ++r) {
    const auto& e = rs.equations[r];
    for (const auto& z : e.zero)
      if (column[z.unknown] >= 0) mm.entries[r * mm.cols() + column[z.unknown]].s0 += z.coeff;
    for (const auto& d : e.derivs) {
      if (column[d.unknown] < 0) continue;
      Affine& a = mm.entries[r * mm.cols() + column[d.unknown]];
      const auto& sym = spec.fibration.vectors[d.frame].symbol;
      for (int j = 0; j < mm.rank; ++j) a.s[j] += d.coeff * sym[j];
    }
  }
  return mm;
}

std::vector<std::vector<Scalar>> mode_kernel(const ModeMatrix& m, const ModeVector& mode) {
  auto cols = m.active_columns(mode);
  std::vector<std::vector<Scalar>> out;
  for (const auto& v : algebra::kernel(m.eval(mode))) {
    std::vector<Scalar> full(m.cols());
    for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = v[k];
    out.push_back(std::move(full));
  }
  return out;
}

ModeSearch contributing_modes(const ModeMatrix& m, long bound) {
  ModeSearch out;
  const int r = m.rank;
  ModeVector zero(r, 0);
  if (!mode_kernel(m, zero).empty()) out.modes.push_back(zero);
  std::vector<std::size_t> base_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.constant_column[c]) base_cols.push_back(c);
  const std::size_t k = base_cols.size();
  if (r == 0 || k == 0) return out;
  if (r > 2) {
    out.determined = false;
    out.reason = "base lattice rank " + std::to_string(r) + " exceeds 2";
    return out;
  }
  if (m.rows < k) {
    out.determined = false;
    out.reason = "fewer residual equations than base-only unknowns: every mode has a kernel";
    return out;
  }
  // Kernel is nontrivial iff every maximal minor vanishes.
  std::vector<std::vector<std::size_t>> row_sets;
  std::vector<std::size_t> cur;
  subsets(m.rows, k, 0, cur, row_sets);
  std::vector<QMPoly> system;
  for (const auto& rows : row_sets) {
    std::vector<std::vector<SPoly>> sub;
    for (std::size_t i : rows) {
      std::vector<SPoly> row;
      for (std::size_t c : base_cols) row.push_back(to_poly(m.at(i, c), r));
      sub.push_back(std::move(row));
    }
    split_scalar_poly(determinant(sub, r), r, system);
  }
  auto sols = integer_solutions(system, r, bound);
  if (!sols) {
    out.determined = false;
    out.reason = "mode elimination did not produce a finite candidate set within the bound " + std::to_string(bound);
    return out;
  }
  for (const auto& s : *sols) {
    if (is_zero_mode(s)) continue;
    if (!mode_kernel(m, s).empty()) out.modes.push_back(s);
  }
  std::sort(out.modes.begin(), out.modes.end());
  return out;
}

ModeForm::ModeForm(const ModeVector& m, const Form& alpha) : n_(alpha.n()) { add(m, alpha); }

void ModeForm::add(const ModeVector& m, const Form& alpha) {
  if (alpha.is_zero()) return;
  auto [it, ins] = terms_.emplace(m, alpha);
  if (ins) return;
  it->second = it->second + alpha;
  if (it->second.is_zero()) terms_.erase(it);
}

Form ModeForm::part(const ModeVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Form(n_) : it->second;
}

ModeForm operator+(ModeForm a, const ModeForm& b) {
  if (a.n_ == 0) a.n_ = b.n_;
  for (const auto& [m, f] : b.terms_) a.add(m, f);
  return a;
}

ModeForm operator*(const Scalar& s, const ModeForm& f) {
  ModeForm out(f.n_);
  for (const auto& [m, a] : f.terms_) out.add(m, s * a);
  return out;
}

std::string ModeForm::to_string(const std::vector<std::string>& coords) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, f] : terms_) {
    if (!out.empty()) out += " + ";
    if (is_zero_mode(m)) {
      out += terms_.size() > 1 ? "(" + f.to_string() + ")" : f.to_string();
    } else {
      out += "e^{2πi(" + mode_exponent(m, coords, false) + ")}(" + f.to_string() + ")";
    }
  }
  return out;
}

std::string ModeForm::to_ascii(const std::vector<std::string>& coords) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, f] : terms_) {
    if (!out.empty()) out += " + ";
    if (is_zero_mode(m)) {
      out += terms_.size() > 1 ? "(" + f.to_ascii() + ")" : f.to_ascii();
    } else {
      out += "exp(2*pi*i*(" + mode_exponent(m, coords, true) + "))*(" + f.to_ascii() + ")";
    }
  }
  return out;
}

ModeForm dbar(const ModeForm& f, const manifold::ManifoldSpec& spec) {
  const int n = spec.n;
  manifold::OperatorSplit ops = manifold::split_d(spec);
  ModeForm out(n);
  for (const auto& [m, alpha] : f.terms()) {
    Form g = ops.delbar.apply(alpha);
    for (int i = 0; i < n; ++i) {
      Scalar s = spec.fibration.vectors[i].symbol_at(m);
      if (!s.is_zero()) g = g + s * wedge(Form::monomial(n, Mask(1) << (n + i)), alpha);
    }
    out.add(m, g);
  }
  return out;
}

ModeForm exterior_d(const ModeForm& f, const manifold::ManifoldSpec& spec) {
  const int n = spec.n;
  ModeForm out(n);
  for (const auto& [m, alpha] : f.terms()) {
    Form g = manifold::exterior_d(alpha, spec);
    for (int i = 0; i < n; ++i) {
      Scalar s = spec.fibration.vectors[i].symbol_at(m);
      if (s.is_zero()) continue;
      g = g + s * wedge(Form::monomial(n, Mask(1) << (n + i)), alpha);
      g = g - s.conj() * wedge(Form::monomial(n, Mask(1) << i), alpha);
    }
    out.add(m, g);
  }
  return out;
}

ModeForm apply(const algebra::LinearMap& op, const ModeForm& f) {
  ModeForm out(f.n());
  for (const auto& [m, alpha] : f.terms()) out.add(m, op.apply(alpha));
  return out;
}

}  // namespace ahodge::fourier
