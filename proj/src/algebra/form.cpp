/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/algebra/form.hpp"

#include <algorithm>

#include "ahodge/algebra/interval.hpp"
#include "ahodge/error.hpp"

namespace ahodge::algebra {

namespace {

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for (int k = 0; m != 0; ++k, m >>= 1)
    if (m & 1u) out.push_back(k);
  return out;
}

Mask mask_of(const std::vector<int>& idx, int offset) {
  Mask m = 0;
  for (int k : idx) m |= Mask(1) << (k + offset);
  return m;
}

// All k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string index_digits(Mask m, int n, Notation nt, bool ascii) {
  std::string s;
  for (int k : bits_of(m)) {
    if (nt == Notation::E || k < n) {
      s += std::to_string(k + 1);
    } else {
      s += std::to_string(k - n + 1);
      s += ascii ? "b" : "̄";
    }
  }
  return s;
}

// Coefficient rendering for a product `c * label`.
std::string coefficient_prefix(const Scalar& c, bool ascii) {
  if (c.is_one()) return "";
  if ((-c).is_one()) return "-";
  std::string s = c.to_string();
  bool atomic = s.find_first_of("+ ") == std::string::npos;
  if (s == "i" || s == "-i") return ascii ? s + "*" : s;
  if (!atomic) s = "(" + s + ")";
  return ascii ? s + "*" : s;
}

std::string render(const std::map<Mask, Scalar>& terms, int n, Notation nt, bool ascii) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string term;
    if (m == 0) {
      term = c.to_string();
      if (term.find_first_of("+ ") != std::string::npos) term = "(" + term + ")";
    } else {
      term = coefficient_prefix(c, ascii) + (ascii ? monomial_ascii(m, n, nt) : monomial_label(m, n, nt));
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (x in a, y in b) with x > y.
  int inv = 0;
  for (int y : bits_of(b)) inv += popcount(a & ~((Mask(2) << y) - 1));
  return (inv & 1) ? -1 : 1;
}

std::pair<int, Mask> sort_word(const std::vector<int>& word) {
  int inv = 0;
  Mask m = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    Mask bit = Mask(1) << word[i];
    if (m & bit) return {0, 0};
    m |= bit;
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inv;
  }
  return {(inv & 1) ? -1 : 1, m};
}

std::pair<int, int> bidegree(Mask m, int n) {
  Mask low = (Mask(1) << n) - 1;
  return {popcount(m & low), popcount(m >> n)};
}

Form Form::monomial(int n, Mask m, const Scalar& c) {
  Form f(n);
  f.add(m, c);
  return f;
}

Scalar Form::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void Form::add(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int Form::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, popcount(m));
  return d;
}

bool Form::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d >= 0 && popcount(m) != d) return false;
    d = popcount(m);
  }
  return true;
}

Form Form::operator-() const {
  Form f(n_);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (o.n_ != n_ && !o.is_zero() && !is_zero()) throw DimensionMismatch("form dimension mismatch");
  if (is_zero()) n_ = std::max(n_, o.n_);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const Scalar& s, const Form& f) {
  Form r(f.n_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : f.terms_) r.terms_.emplace(m, s * c);
  return r;
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw DimensionMismatch("wedge of forms of different dimension");
  Form r(a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      r.add(ma | mb, s > 0 ? c : -c);
    }
  return r;
}

Form Form::conj() const {
  Form r(n_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> word;
    for (int k : bits_of(m)) word.push_back(k < n_ ? k + n_ : k - n_);
    auto [s, mm] = sort_word(word);
    Scalar cc = c.conj();
    r.add(mm, s > 0 ? cc : -cc);
  }
  return r;
}

Form Form::conj_coefficients() const {
  Form r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
  return r;
}

std::map<std::pair<int, int>, Form> Form::bidegree_split() const {
  std::map<std::pair<int, int>, Form> out;
  for (const auto& [m, c] : terms_) {
    auto [it, ins] = out.try_emplace(bidegree(m, n_), Form(n_));
    it->second.terms_.emplace(m, c);
  }
  return out;
}

Form Form::part(int p, int q) const {
  Form r(n_);
  for (const auto& [m, c] : terms_)
    if (bidegree(m, n_) == std::make_pair(p, q)) r.terms_.emplace(m, c);
  return r;
}

Form Form::substitute(const std::vector<Form>& images) const {
  Form r(n_);
  for (const auto& [m, c] : terms_) {
    Form acc = Form::constant(n_, c);
    for (int k : bits_of(m)) {
      acc = wedge(acc, images.at(k));
      if (acc.is_zero()) break;
    }
    r += acc;
  }
  return r;
}

std::string Form::to_string(Notation nt) const { return render(terms_, n_, nt, false); }

std::string Form::to_ascii(Notation nt) const { return render(terms_, n_, nt, true); }

std::string monomial_label(Mask m, int n, Notation nt) {
  if (m == 0) return "1";
  return std::string(nt == Notation::Phi ? "φ" : "e") + "^{" + index_digits(m, n, nt, false) + "}";
}

std::string monomial_ascii(Mask m, int n, Notation nt) {
  if (m == 0) return "1";
  return std::string(nt == Notation::Phi ? "phi" : "e") + index_digits(m, n, nt, true);
}

std::vector<Mask> monomials(int n, int p, int q) {
  std::vector<Mask> out;
  auto us = subsets(n, p);
  auto bs = subsets(n, q);
  for (const auto& u : us)
    for (const auto& b : bs) out.push_back(mask_of(u, 0) | mask_of(b, n));
  return out;
}

FormBasis::FormBasis(int n) : n_(n) {
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      auto& blk = blocks_[{p, q}];
      for (Mask m : monomials(n, p, q)) {
        index_[m] = masks_.size();
        blk.push_back(masks_.size());
        masks_.push_back(m);
      }
    }
}

const std::vector<std::size_t>& FormBasis::block(int p, int q) const {
  auto it = blocks_.find({p, q});
  if (it == blocks_.end()) throw DegreeMismatch("no block (" + std::to_string(p) + "," + std::to_string(q) + ")");
  return it->second;
}

std::vector<Scalar> FormBasis::coordinates(const Form& f) const {
  std::vector<Scalar> v(masks_.size());
  for (const auto& [m, c] : f.terms()) v[index(m)] = c;
  return v;
}

Form FormBasis::form(const std::vector<Scalar>& coords) const {
  Form f(n_);
  for (std::size_t k = 0; k < coords.size(); ++k) f.add(masks_[k], coords[k]);
  return f;
}

Form LinearMap::apply(const Form& f) const {
  Form r(n_);
  for (const auto& [m, c] : f.terms()) r += c * images_.at(m);
  return r;
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  LinearMap r(n_);
  for (std::size_t m = 0; m < images_.size(); ++m) r.images_[m] = apply(other.images_[m]);
  return r;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  LinearMap r(a.n_);
  for (std::size_t m = 0; m < a.images_.size(); ++m) r.images_[m] = a.images_[m] + b.images_[m];
  return r;
}

bool LinearMap::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const Form& f) { return f.is_zero(); });
}

ScalarMatrix LinearMap::matrix(const FormBasis& basis) const {
  ScalarMatrix mat(basis.size(), basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s)
    for (const auto& [m, c] : images_[basis.masks()[s]].terms()) mat(basis.index(m), s) = c;
  return mat;
}

LinearMap LinearMap::from_matrix(const FormBasis& basis, const ScalarMatrix& m) {
  LinearMap r(basis.n());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    Form f(basis.n());
    for (std::size_t t = 0; t < basis.size(); ++t) f.add(basis.masks()[t], m(t, s));
    r.images_[basis.masks()[s]] = std::move(f);
  }
  return r;
}

GramData::GramData(ScalarMatrix h, int orientation, unsigned precision_bits)
    : h_(std::move(h)), orientation_(orientation) {
  const std::size_t n = h_.rows();
  if (h_.cols() != n) throw DimensionMismatch("Gram matrix must be square");
  if (!(h_ == h_.conj_transpose())) throw NotPositive("Gram matrix is not Hermitian");
  // Sylvester: leading principal minors of a Hermitian matrix are real.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = j;
    Scalar minor = determinant(h_.submatrix(idx, idx));
    if (real_sign(minor, precision_bits) <= 0)
      throw NotPositive("leading minor " + std::to_string(k) + " of the Gram matrix is " + minor.to_string());
  }
  // vol = sigma i^n / det H phi^{1 1bar ... n nbar}; reorder the interleaved word.
  Scalar in(1);
  for (std::size_t k = 0; k < n; ++k) in = in * Scalar::i();
  long reorder = (n * (n - 1) / 2) % 2 ? -1 : 1;
  vol_ = Scalar(orientation_ * reorder) * in / determinant(h_);
}

Form GramData::volume() const {
  int n = this->n();
  return Form::monomial(n, (Mask(1) << (2 * n)) - 1, vol_);
}

Scalar GramData::inner(Mask a, Mask b) const {
  int n = this->n();
  auto [pa, qa] = bidegree(a, n);
  auto [pb, qb] = bidegree(b, n);
  if (pa != pb || qa != qb) return Scalar();
  Mask low = (Mask(1) << n) - 1;
  auto idx = [](Mask m) {
    std::vector<std::size_t> v;
    for (int k : bits_of(m)) v.push_back(static_cast<std::size_t>(k));
    return v;
  };
  Scalar du = pa == 0 ? Scalar(1) : determinant(h_.submatrix(idx(a & low), idx(b & low)));
  if (du.is_zero()) return du;
  Scalar db = qa == 0 ? Scalar(1) : determinant(h_.submatrix(idx(a >> n), idx(b >> n)).conjugate());
  return du * db;
}

Scalar GramData::inner(const Form& a, const Form& b) const {
  Scalar s;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (popcount(ma) != popcount(mb)) throw DegreeMismatch("inner product of forms of different degree");
      Scalar g = inner(ma, mb);
      if (!g.is_zero()) s += ca * g * cb.conj();
    }
  return s;
}

ScalarMatrix GramData::gram(const std::vector<Mask>& ms) const {
  ScalarMatrix g(ms.size(), ms.size());
  for (std::size_t s = 0; s < ms.size(); ++s)
    for (std::size_t t = 0; t < ms.size(); ++t) g(s, t) = inner(ms[s], ms[t]);
  return g;
}

Form GramData::star(const Form& f) const {
  // alpha ^ *gamma = <alpha, conj gamma> vol, solved on monomials alpha.
  int n = this->n();
  Mask top = (Mask(1) << (2 * n)) - 1;
  Form g = f.conj();
  Form r(n);
  FormBasis basis(n);
  for (Mask a : basis.masks()) {
    Scalar s;
    for (const auto& [m, c] : g.terms()) {
      Scalar ip = inner(a, m);
      if (!ip.is_zero()) s += ip * c.conj();
    }
    if (s.is_zero()) continue;
    Mask comp = top & ~a;
    Scalar v = s * vol_;
    r.add(comp, wedge_sign(a, comp) > 0 ? v : -v);
  }
  return r;
}

LinearMap GramData::star_map() const {
  int n = this->n();
  LinearMap r(n);
  FormBasis basis(n);
  for (Mask m : basis.masks()) r.set_image(m, star(Form::monomial(n, m)));
  return r;
}

}  // namespace ahodge::algebra
