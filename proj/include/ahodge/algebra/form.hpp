/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahodge/algebra/matrix.hpp"
#include "ahodge/algebra/scalar.hpp"

namespace ahodge::algebra {

/// Bitmask of generators. In the complex frame bit k < n is phi^{k+1} and
/// bit n + k is its conjugate; in the real frame bit k is e^{k+1}.
using Mask = std::uint32_t;

/// Largest complex dimension accepted (keeps single-digit index names).
inline constexpr int kMaxComplexDim = 4;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Sign of concatenating sorted words A and B; 0 if they share a generator.
int wedge_sign(Mask a, Mask b);

/// Sorts a word of generator indices; returns (sign, mask), sign 0 on repeats.
std::pair<int, Mask> sort_word(const std::vector<int>& word);

/// (p, q) of a complex-frame monomial.
std::pair<int, int> bidegree(Mask m, int n);

enum class Notation { Phi, E };

/// Finite exterior element with Scalar coefficients, keyed by sorted monomial.
class Form {
 public:
  explicit Form(int n = 0) : n_(n) {}

  static Form monomial(int n, Mask m, const Scalar& c = Scalar(1));
  static Form constant(int n, const Scalar& c) { return monomial(n, 0, c); }
  /// Generator k (0-based over all 2n generators).
  static Form generator(int n, int k) { return monomial(n, Mask(1) << k); }

  int n() const { return n_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(Mask m) const;
  void add(Mask m, const Scalar& c);

  /// Degree of the top-degree term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& s, const Form& f);
  friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Complex conjugation in the phi frame: phi^k <-> phi^{k bar}.
  Form conj() const;
  /// Conjugates coefficients only (the real-frame conjugation).
  Form conj_coefficients() const;

  std::map<std::pair<int, int>, Form> bidegree_split() const;
  Form part(int p, int q) const;

  /// Algebra homomorphism sending generator k to images[k].
  Form substitute(const std::vector<Form>& images) const;

  /// Human notation, e.g. `(1/2)φ^{12̄} - iφ^{3}`.
  std::string to_string(Notation nt = Notation::Phi) const;
  /// Manifest syntax, e.g. `1/2*phi12b - i*phi3`.
  std::string to_ascii(Notation nt = Notation::Phi) const;

 private:
  int n_;
  std::map<Mask, Scalar> terms_;
};

Form wedge(const Form& a, const Form& b);

/// Monomial label in human notation, e.g. `φ^{12̄}` or `e^{13}`; `1` for the empty word.
std::string monomial_label(Mask m, int n, Notation nt);
/// Monomial label in manifest syntax, e.g. `phi12b`, `e13`.
std::string monomial_ascii(Mask m, int n, Notation nt);

/// Monomials of bidegree (p, q): unbarred part lexicographic, then barred part.
std::vector<Mask> monomials(int n, int p, int q);

/// Ordered monomial basis of the whole exterior algebra, grouped by (p, q)
/// blocks in lexicographic block order.
class FormBasis {
 public:
  explicit FormBasis(int n);
  int n() const { return n_; }
  std::size_t size() const { return masks_.size(); }
  const std::vector<Mask>& masks() const { return masks_; }
  std::size_t index(Mask m) const { return index_.at(m); }
  /// Positions of the (p, q) block inside the full basis.
  const std::vector<std::size_t>& block(int p, int q) const;

  std::vector<Scalar> coordinates(const Form& f) const;
  Form form(const std::vector<Scalar>& coords) const;

 private:
  int n_;
  std::vector<Mask> masks_;
  std::map<Mask, std::size_t> index_;
  std::map<std::pair<int, int>, std::vector<std::size_t>> blocks_;
};

/// Linear map on invariant forms, stored by the images of all monomials.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(int n) : n_(n), images_(std::size_t(1) << (2 * n), Form(n)) {}

  int n() const { return n_; }
  const Form& image(Mask m) const { return images_[m]; }
  void set_image(Mask m, Form f) { images_[m] = std::move(f); }

  Form apply(const Form& f) const;
  /// (this o other)(x) = this(other(x)).
  LinearMap compose(const LinearMap& other) const;
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.images_ == b.images_; }
  bool is_zero() const;

  /// Matrix in the given basis (column s = coordinates of the image of basis[s]).
  ScalarMatrix matrix(const FormBasis& basis) const;
  static LinearMap from_matrix(const FormBasis& basis, const ScalarMatrix& m);

 private:
  int n_ = 0;
  std::vector<Form> images_;
};

/// Hermitian data on the (1,0)-coframe: H_ij = <phi^i, phi^j>, plus the
/// orientation sign of the phi frame relative to the real frame.
class GramData {
 public:
  GramData() = default;
  /// Certifies positivity; throws NotPositive otherwise.
  GramData(ScalarMatrix h, int orientation, unsigned precision_bits = 128);

  int n() const { return static_cast<int>(h_.rows()); }
  const ScalarMatrix& h() const { return h_; }
  int orientation() const { return orientation_; }
  /// vol = volume_coefficient() * phi^{1..n 1bar..nbar}.
  const Scalar& volume_coefficient() const { return vol_; }
  Form volume() const;

  Scalar inner(Mask a, Mask b) const;
  /// Linear in the first slot, conjugate-linear in the second.
  Scalar inner(const Form& a, const Form& b) const;
  /// G[s][t] = <basis[s], basis[t]> for the given monomials.
  ScalarMatrix gram(const std::vector<Mask>& ms) const;

  Form star(const Form& f) const;
  LinearMap star_map() const;

 private:
  ScalarMatrix h_;
  int orientation_ = 1;
  Scalar vol_;
};

}  // namespace ahodge::algebra
