/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ahodge/algebra/form.hpp"
#include "ahodge/algebra/matrix.hpp"

namespace ahodge::manifold {

/// Per (1,0)-frame-vector data. `symbol` holds s_1..s_r: the conjugated
/// frame vector acts on the base character exp(2 pi i <m, theta>) as
/// multiplication by sum_j s_j m_j.
struct FrameVector {
  bool pure_fiber = true;
  std::vector<algebra::Scalar> symbol;

  algebra::Scalar symbol_at(const std::vector<long>& m) const;
};

struct FibrationData {
  int rank = 0;
  std::vector<std::string> coords;
  std::vector<FrameVector> vectors;
  /// 0-based frame indices declared to span the fiber directions.
  std::vector<int> fiber_span;
};

struct MetricSource {
  enum class Kind { Omega, Gram };
  Kind kind = Kind::Omega;
  algebra::Form omega;  ///< in the phi frame
  algebra::ScalarMatrix gram;
};

/// Validated manifold description: structure equations in both frames,
/// metric data and fibration data, parameters already substituted.
struct ManifoldSpec {
  std::string name;
  int n = 0;  ///< complex dimension
  std::vector<std::pair<std::string, algebra::Scalar>> params;

  bool has_real_frame = false;
  /// phi = P e, as a 2n x 2n matrix whose last n rows are the conjugates.
  algebra::ScalarMatrix frame_change;
  /// e = Q (phi, phibar), the inverse of frame_change.
  algebra::ScalarMatrix frame_inverse;
  /// d of each real generator in the e frame (2n entries).
  std::vector<algebra::Form> real_d;
  /// d of each complex generator phi^1..phi^n, phibar^1..phibar^n.
  std::vector<algebra::Form> complex_d;
  /// Orientation of the phi frame against e^1 ^ ... ^ e^2n.
  int orientation = 1;
  /// d extended to all monomials of each frame.
  algebra::LinearMap d_phi;
  algebra::LinearMap d_e;

  MetricSource metric;
  FibrationData fibration;

  /// e-frame form rewritten in the phi frame.
  algebra::Form to_phi(const algebra::Form& e_form) const;
  /// phi-frame form rewritten in the e frame (needs a real frame).
  algebra::Form to_e(const algebra::Form& phi_form) const;
};

using Overrides = std::map<std::string, std::string>;

/// Parses and validates a manifest. Overrides replace parameter values
/// (as expression text) before anything else is evaluated.
ManifoldSpec load_spec(const std::string& text, const Overrides& overrides = {});

}  // namespace ahodge::manifold
