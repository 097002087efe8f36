/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ahodge/algebra/form.hpp"
#include "ahodge/manifold/spec.hpp"

namespace ahodge::pdesolve {

/// Only ever tightens: Free -> BaseOnly -> Constant -> Zero.
enum class Status { Free, BaseOnly, Constant, Zero };

const char* status_name(Status s);

/// coeff * conj(V_frame)(f_unknown)
struct DerivTerm {
  int frame;
  int unknown;
  algebra::Scalar coeff;
};

/// coeff * f_unknown
struct ZeroTerm {
  int unknown;
  algebra::Scalar coeff;
};

struct Equation {
  std::size_t id;       ///< position in the unreduced system
  algebra::Mask output; ///< the (p,1) monomial this equation is the coefficient of
  std::vector<DerivTerm> derivs;
  std::vector<ZeroTerm> zero;

  bool is_trivial() const { return derivs.empty() && zero.empty(); }
};

/// One recorded status promotion and the equations (by id) that justify it.
struct Certificate {
  int unknown;
  Status from;
  Status to;
  std::string rule;  ///< "fiber" or "global"
  std::vector<std::size_t> equations;
  std::vector<Status> context;  ///< statuses when the rule fired
};

/// First-order system equivalent to dbar psi = 0 for psi = sum_J f_J phi^J.
struct PDESystem {
  int n = 0;
  int p = 0;
  std::vector<algebra::Mask> unknowns;  ///< phi^J for each f_J
  std::vector<std::string> names;
  std::vector<Status> status;
  std::vector<Equation> equations;
  std::vector<Certificate> certificates;

  std::string equation_string(const Equation& e) const;
  friend bool operator==(const PDESystem& a, const PDESystem& b);
};

using ReducedSystem = PDESystem;

/// Coefficient of phi^{J ibar} in dbar psi:
///   (-1)^p conj(V_i)(f_J) + sum_I f_I [dbar phi^I]_{J ibar} = 0.
PDESystem build_dbar_system(int p, const manifold::ManifoldSpec& spec);

/// Fiber rule: if for every i in fiber_span the equation carrying
/// conj(V_i)(f) has no other unknowns than base-only or constant ones, then
/// f is constant along the fibers.
PDESystem infer_fiber_constancy(const PDESystem& sys, const manifold::ManifoldSpec& spec);

/// Global rule: if for every i the equation carrying conj(V_i)(f) has a
/// remainder annihilated by V_i, then sum V_i conj(V_i) f = 0 and f is constant.
PDESystem infer_global_constancy(const PDESystem& sys, const manifold::ManifoldSpec& spec);

/// Runs both rules to a fixpoint, then drops derivative terms that vanish
/// (constants; fiber derivatives of base-only unknowns) and trivial equations.
ReducedSystem reduce(const PDESystem& sys, const manifold::ManifoldSpec& spec);

/// Re-checks a certificate against the unreduced system. Returns false if
/// the recorded equations do not justify the promotion.
bool verify_certificate(const PDESystem& original, const Certificate& cert, const manifold::ManifoldSpec& spec);

}  // namespace ahodge::pdesolve
