/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/obstruction/obstruction.hpp"

#include "ahodge/manifold/differential.hpp"

namespace ahodge::obstruction {

using algebra::Form;
using algebra::Mask;

const char* verdict_name(Verdict v) { return v == Verdict::Obstructed ? "Obstructed" : "Inconclusive"; }

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::None: return "none";
    case Rule::Theorem: return "theorem";
    case Rule::CoframeCorollary: return "coframe_corollary";
  }
  return "?";
}

ObstructionVerdict coframe_obstruction(const manifold::ManifoldSpec& spec) {
  ObstructionVerdict v;
  const fourier::ModeVector zero(spec.fibration.rank, 0);
  for (int j = 0; j < spec.n; ++j) {
    Form phi = Form::monomial(spec.n, Mask(1) << j);
    Form dphi = manifold::exterior_d(phi, spec);
    if (dphi.is_zero() || !dphi.part(1, 1).is_zero()) continue;
    v.verdict = Verdict::Obstructed;
    v.rule = Rule::CoframeCorollary;
    v.witness = fourier::ModeForm(zero, phi);
    v.note = "d of coframe element " + std::to_string(j + 1) + " has types (2,0) and (0,2) only";
    return v;
  }
  v.note = "every coframe differential is zero or has a (1,1) part";
  return v;
}

ObstructionVerdict symplectic_obstruction(const manifold::ManifoldSpec& spec, const fourier::HarmonicSpace& h10) {
  if (h10.exact()) {
    for (const auto& psi : h10.basis) {
      if (fourier::exterior_d(psi, spec).is_zero()) continue;
      ObstructionVerdict v;
      v.verdict = Verdict::Obstructed;
      v.rule = Rule::Theorem;
      v.witness = psi;
      v.note = "dbar-closed (1,0)-form that is not closed";
      return v;
    }
  }
  ObstructionVerdict v = coframe_obstruction(spec);
  if (v.verdict == Verdict::Inconclusive)
    v.note = h10.exact() ? "every computed dbar-closed (1,0)-form is closed; " + v.note
                         : "degree-one space undetermined; " + v.note;
  return v;
}

ObstructionVerdict symplectic_obstruction(const manifold::ManifoldSpec& spec, const fourier::FourierOptions& opts) {
  return symplectic_obstruction(spec, fourier::harmonic_basis_dbar(1, spec, opts));
}

bool verify_witness(const ObstructionVerdict& v, const manifold::ManifoldSpec& spec) {
  if (v.verdict != Verdict::Obstructed || !v.witness) return false;
  return fourier::dbar(*v.witness, spec).is_zero() && !fourier::exterior_d(*v.witness, spec).is_zero();
}

}  // namespace ahodge::obstruction
