/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <string>

#include "ahodge/fourier/harmonic.hpp"
#include "ahodge/manifold/spec.hpp"

namespace ahodge::obstruction {

enum class Verdict { Obstructed, Inconclusive };
enum class Rule { None, Theorem, CoframeCorollary };

const char* verdict_name(Verdict v);
const char* rule_name(Rule r);

/// A (1,0)-form phi with dbar phi = 0 and d phi != 0 rules out symplectic
/// forms compatible with J. Inconclusive never means one exists.
struct ObstructionVerdict {
  Verdict verdict = Verdict::Inconclusive;
  Rule rule = Rule::None;
  std::optional<fourier::ModeForm> witness;
  std::string note;
};

/// Looks for a coframe element whose differential has no (1,1) part.
ObstructionVerdict coframe_obstruction(const manifold::ManifoldSpec& spec);

/// Searches the computed dbar-closed (1,0)-forms for one that is not closed,
/// then falls back to the coframe test.
ObstructionVerdict symplectic_obstruction(const manifold::ManifoldSpec& spec,
                                          const fourier::FourierOptions& opts = {});
/// Same, reusing an already computed degree-one dbar space.
ObstructionVerdict symplectic_obstruction(const manifold::ManifoldSpec& spec, const fourier::HarmonicSpace& h10);

/// Re-expands the witness: dbar phi = 0 and d phi != 0.
bool verify_witness(const ObstructionVerdict& v, const manifold::ManifoldSpec& spec);

}  // namespace ahodge::obstruction
