/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahodge/algebra/form.hpp"
#include "ahodge/algebra/matrix.hpp"
#include "ahodge/manifold/spec.hpp"
#include "ahodge/pdesolve/system.hpp"

namespace ahodge::fourier {

using ModeVector = std::vector<long>;

/// Default cap on the integer root search.
inline constexpr long kDefaultModesBound = 1000000;

/// s0 + sum_j s[j] * m_j
struct Affine {
  algebra::Scalar s0;
  std::vector<algebra::Scalar> s;

  algebra::Scalar eval(const ModeVector& m) const;
  bool is_zero() const;
};

/// Per-mode linear system obtained by substituting Fourier expansions into
/// a reduced system. Constant unknowns only have a mode-0 column.
struct ModeMatrix {
  int rank = 0;
  std::size_t rows = 0;
  std::vector<int> unknowns;         ///< column -> unknown index in the system
  std::vector<bool> constant_column;
  std::vector<Affine> entries;       ///< row-major

  const Affine& at(std::size_t r, std::size_t c) const { return entries[r * unknowns.size() + c]; }
  std::size_t cols() const { return unknowns.size(); }
  /// Columns present at mode m.
  std::vector<std::size_t> active_columns(const ModeVector& m) const;
  algebra::ScalarMatrix eval(const ModeVector& m) const;
};

ModeMatrix mode_matrix(const pdesolve::ReducedSystem& rs, const manifold::ManifoldSpec& spec);

struct ModeSearch {
  bool determined = true;
  std::vector<ModeVector> modes;  ///< lexicographic, mode 0 included when its kernel is nontrivial
  std::string reason;
};

/// Exact set of modes at which the system has a nontrivial kernel.
ModeSearch contributing_modes(const ModeMatrix& m, long bound = kDefaultModesBound);

/// Kernel of the mode-m system, as coordinate vectors over all columns.
std::vector<std::vector<algebra::Scalar>> mode_kernel(const ModeMatrix& m, const ModeVector& mode);

/// Finite sum of e^{2 pi i <m, theta>} alpha_m with invariant alpha_m.
class ModeForm {
 public:
  ModeForm() = default;
  explicit ModeForm(int n) : n_(n) {}
  ModeForm(const ModeVector& m, const algebra::Form& alpha);

  int n() const { return n_; }
  const std::map<ModeVector, algebra::Form>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ModeVector& m, const algebra::Form& alpha);
  /// The invariant part, or zero.
  algebra::Form part(const ModeVector& m) const;

  friend ModeForm operator+(ModeForm a, const ModeForm& b);
  friend ModeForm operator*(const algebra::Scalar& s, const ModeForm& f);
  friend bool operator==(const ModeForm& a, const ModeForm& b) { return a.terms_ == b.terms_; }

  /// e^{2πi(x)}(φ^{12} - φ^{13}); `coords` names the base coordinates.
  std::string to_string(const std::vector<std::string>& coords) const;
  /// exp(2*pi*i*(x))*(phi12 - phi13)
  std::string to_ascii(const std::vector<std::string>& coords) const;

 private:
  int n_ = 0;
  std::map<ModeVector, algebra::Form> terms_;
};

/// dbar of a mode-weighted form, expanded symbolically from the frame symbols.
ModeForm dbar(const ModeForm& f, const manifold::ManifoldSpec& spec);
/// d of a mode-weighted form.
ModeForm exterior_d(const ModeForm& f, const manifold::ManifoldSpec& spec);
/// A zero-order operator applied termwise.
ModeForm apply(const algebra::LinearMap& op, const ModeForm& f);

}  // namespace ahodge::fourier
