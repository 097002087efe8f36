/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/fourier/harmonic.hpp"

#include <algorithm>
#include <map>

#include "ahodge/error.hpp"
#include "ahodge/pdesolve/system.hpp"

namespace ahodge::fourier {

using algebra::Form;
using algebra::FormBasis;
using algebra::Mask;
using algebra::Scalar;
using algebra::ScalarMatrix;

const char* status_name(SpaceStatus s) { return s == SpaceStatus::Exact ? "EXACT" : "UNDETERMINED"; }

bool HarmonicReport::exact() const {
  auto all = [](const std::vector<HarmonicSpace>& v) {
    return std::all_of(v.begin(), v.end(), [](const HarmonicSpace& s) { return s.exact(); });
  };
  return all(dbar) && all(deltabar) && all(dolbeault);
}

namespace {

// Keeps the combinations of the basis on which a zero-order operator
// vanishes. Basis elements are grouped by mode since the conditions at
// distinct modes are independent.
HarmonicSpace filter(const HarmonicSpace& src, const algebra::LinearMap& op, int n) {
  HarmonicSpace out = src;
  out.basis.clear();
  if (!src.exact()) return out;
  FormBasis fb(n);
  std::map<ModeVector, std::vector<Form>> by_mode;
  for (const auto& psi : src.basis)
    for (const auto& [m, alpha] : psi.terms()) by_mode[m].push_back(alpha);
  for (const auto& [m, alphas] : by_mode) {
    ScalarMatrix cond(fb.size(), alphas.size());
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      auto c = fb.coordinates(op.apply(alphas[k]));
      for (std::size_t r = 0; r < c.size(); ++r) cond(r, k) = c[r];
    }
    for (const auto& v : algebra::kernel(cond)) {
      Form combo(n);
      for (std::size_t k = 0; k < alphas.size(); ++k)
        if (!v[k].is_zero()) combo = combo + v[k] * alphas[k];
      out.basis.emplace_back(m, combo);
    }
  }
  return out;
}

algebra::LinearMap mubar_star(const manifold::ManifoldSpec& spec, const hermitian::HermitianData& h) {
  return manifold::split_d(spec).mubar.compose(h.gram.star_map());
}

}  // namespace

HarmonicSpace harmonic_basis_dbar(int p, const manifold::ManifoldSpec& spec, const FourierOptions& opts) {
  const int n = spec.n;
  if (p < 0 || p > n) throw DegreeMismatch("degree " + std::to_string(p) + " out of range");
  HarmonicSpace out;
  out.p = p;
  ModeVector zero(spec.fibration.rank, 0);
  if (p == 0) {
    out.basis.emplace_back(zero, Form::constant(n, Scalar(1)));
    out.modes.push_back(zero);
    return out;
  }
  pdesolve::PDESystem sys = pdesolve::build_dbar_system(p, spec);
  pdesolve::ReducedSystem rs = pdesolve::reduce(sys, spec);
  ModeMatrix mm;
  try {
    mm = mode_matrix(rs, spec);
  } catch (const UndeterminedUnknowns& e) {
    out.status = SpaceStatus::Undetermined;
    out.reason = e.what();
    return out;
  }
  ModeSearch search = contributing_modes(mm, opts.modes_bound);
  if (!search.determined) {
    out.status = SpaceStatus::Undetermined;
    out.reason = search.reason;
    return out;
  }
  out.modes = search.modes;
  for (const auto& m : search.modes)
    for (const auto& v : mode_kernel(mm, m)) {
      Form alpha(n);
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) alpha.add(rs.unknowns[mm.unknowns[c]], v[c]);
      out.basis.emplace_back(m, alpha);
    }
  return out;
}

HarmonicSpace harmonic_basis_deltabar(const HarmonicSpace& dbar_space, const manifold::ManifoldSpec& spec,
                                      const hermitian::HermitianData& h) {
  return filter(dbar_space, mubar_star(spec, h), spec.n);
}

HarmonicSpace harmonic_basis_deltabar(int p, const manifold::ManifoldSpec& spec, const hermitian::HermitianData& h,
                                      const FourierOptions& opts) {
  return harmonic_basis_deltabar(harmonic_basis_dbar(p, spec, opts), spec, h);
}

HarmonicSpace dolbeault_basis(const HarmonicSpace& dbar_space, const manifold::ManifoldSpec& spec) {
  return filter(dbar_space, manifold::split_d(spec).mubar, spec.n);
}

HarmonicSpace dolbeault_basis(int p, const manifold::ManifoldSpec& spec, const FourierOptions& opts) {
  return dolbeault_basis(harmonic_basis_dbar(p, spec, opts), spec);
}

bool verify_dbar_element(const ModeForm& psi, const manifold::ManifoldSpec& spec) {
  return dbar(psi, spec).is_zero();
}

bool verify_deltabar_element(const ModeForm& psi, const manifold::ManifoldSpec& spec,
                             const hermitian::HermitianData& h) {
  return verify_dbar_element(psi, spec) && apply(mubar_star(spec, h), psi).is_zero();
}

bool verify_dolbeault_element(const ModeForm& psi, const manifold::ManifoldSpec& spec) {
  return verify_dbar_element(psi, spec) && apply(manifold::split_d(spec).mubar, psi).is_zero();
}

bool independent(const std::vector<ModeForm>& basis) {
  if (basis.empty()) return true;
  std::map<std::pair<ModeVector, Mask>, std::size_t> index;
  for (const auto& psi : basis)
    for (const auto& [m, alpha] : psi.terms())
      for (const auto& [mask, c] : alpha.terms()) index.emplace(std::make_pair(m, mask), 0);
  std::size_t k = 0;
  for (auto& [key, i] : index) i = k++;
  ScalarMatrix mat(index.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, alpha] : basis[j].terms())
      for (const auto& [mask, c] : alpha.terms()) mat(index.at({m, mask}), j) = c;
  return algebra::rank(mat) == basis.size();
}

}  // namespace ahodge::fourier
