/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "ahodge/fourier/modes.hpp"
#include "ahodge/hermitian/hermitian.hpp"
#include "ahodge/manifold/differential.hpp"

namespace ahodge::fourier {

enum class SpaceStatus { Exact, Undetermined };

const char* status_name(SpaceStatus s);

/// Basis of a harmonic space of (p,0)-forms.
struct HarmonicSpace {
  int p = 0;
  SpaceStatus status = SpaceStatus::Exact;
  std::vector<ModeForm> basis;
  std::vector<ModeVector> modes;  ///< modes at which the dbar system had kernel
  std::string reason;             ///< set when undetermined

  std::size_t dimension() const { return basis.size(); }
  bool exact() const { return status == SpaceStatus::Exact; }
};

struct FourierOptions {
  long modes_bound = kDefaultModesBound;
};

/// dbar-closed (p,0)-forms: build, reduce, substitute modes, take kernels.
HarmonicSpace harmonic_basis_dbar(int p, const manifold::ManifoldSpec& spec, const FourierOptions& opts = {});

/// Restricts a dbar basis to mubar(star psi) = 0.
HarmonicSpace harmonic_basis_deltabar(const HarmonicSpace& dbar_space, const manifold::ManifoldSpec& spec,
                                      const hermitian::HermitianData& h);
HarmonicSpace harmonic_basis_deltabar(int p, const manifold::ManifoldSpec& spec, const hermitian::HermitianData& h,
                                      const FourierOptions& opts = {});

/// Restricts a dbar basis to mubar psi = 0.
HarmonicSpace dolbeault_basis(const HarmonicSpace& dbar_space, const manifold::ManifoldSpec& spec);
HarmonicSpace dolbeault_basis(int p, const manifold::ManifoldSpec& spec, const FourierOptions& opts = {});

/// Independent re-expansion: dbar psi = 0, and for the filtered spaces the
/// extra zero-order condition.
bool verify_dbar_element(const ModeForm& psi, const manifold::ManifoldSpec& spec);
bool verify_deltabar_element(const ModeForm& psi, const manifold::ManifoldSpec& spec,
                             const hermitian::HermitianData& h);
bool verify_dolbeault_element(const ModeForm& psi, const manifold::ManifoldSpec& spec);

/// Exact linear independence over Scalars.
bool independent(const std::vector<ModeForm>& basis);

/// Per-degree results for all three theories.
struct HarmonicReport {
  std::string manifold;
  int n = 0;
  std::vector<int> degrees;
  std::vector<HarmonicSpace> dbar;
  std::vector<HarmonicSpace> deltabar;
  std::vector<HarmonicSpace> dolbeault;
  bool d_squared_zero = true;
  std::vector<manifold::RelationCheck> relations;
  bool integrable = false;
  bool almost_kahler = false;
  std::string ak_identity;  ///< "holds", "fails" or "n/a"
  std::string obstruction;  ///< verdict name

  bool exact() const;
};

}  // namespace ahodge::fourier
