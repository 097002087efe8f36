/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "ahodge/algebra/form.hpp"
#include "ahodge/manifold/spec.hpp"

namespace ahodge::manifold {

/// Extension of generator images to an antiderivation on all monomials.
algebra::LinearMap antiderivation(int n, const std::vector<algebra::Form>& generator_images);

/// d on invariant forms in the phi frame.
algebra::Form exterior_d(const algebra::Form& phi_form, const ManifoldSpec& spec);
/// d on invariant forms in the e frame.
algebra::Form exterior_d_real(const algebra::Form& e_form, const ManifoldSpec& spec);

/// d = mu + del + delbar + mubar, split by bidegree shift
/// (+2,-1), (+1,0), (0,+1), (-1,+2).
struct OperatorSplit {
  algebra::LinearMap d;
  algebra::LinearMap mu;
  algebra::LinearMap del;
  algebra::LinearMap delbar;
  algebra::LinearMap mubar;
};

OperatorSplit split_d(const ManifoldSpec& spec);

struct RelationCheck {
  std::string name;
  bool holds;
};

/// The seven identities that d^2 = 0 splits into.
std::vector<RelationCheck> check_d2_relations(const OperatorSplit& ops);
std::vector<RelationCheck> check_d2_relations(const ManifoldSpec& spec);

/// True iff mu and mubar vanish on 1-forms.
bool is_integrable(const OperatorSplit& ops);
bool is_integrable(const ManifoldSpec& spec);

}  // namespace ahodge::manifold
