/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <map>
#include <utility>

#include "ahodge/algebra/form.hpp"
#include "ahodge/algebra/interval.hpp"
#include "ahodge/algebra/matrix.hpp"
#include "ahodge/manifold/differential.hpp"
#include "ahodge/manifold/spec.hpp"

namespace ahodge::hermitian {

struct HermitianData {
  algebra::GramData gram;
  algebra::Form omega;  ///< fundamental form, phi frame
  bool is_compatible = true;
  bool is_almost_kahler = false;
};

/// Metric g = omega(., J .) from a real (1,1)-form. Writing
/// omega = (i/2) sum h_jk phi^j ^ phibar^k, the Gram matrix of the coframe
/// is H = 2 (h^-1)^T.
HermitianData metric_from_pair(const algebra::Form& omega, const manifold::ManifoldSpec& spec,
                               unsigned precision_bits = algebra::kDefaultPrecisionBits);

/// Dispatches on the manifest metric (omega or explicit Gram matrix).
HermitianData metric_from_spec(const manifold::ManifoldSpec& spec,
                               unsigned precision_bits = algebra::kDefaultPrecisionBits);

bool is_almost_kahler(const HermitianData& h, const manifold::ManifoldSpec& spec);

/// Adjoint of M : src -> tgt w.r.t. Gram matrices G[s][t] = <b_s, b_t>
/// (inner product linear in the first slot): conj(G_src)^-1 M^* conj(G_tgt).
algebra::ScalarMatrix operator_adjoint(const algebra::ScalarMatrix& m, const algebra::ScalarMatrix& g_src,
                                       const algebra::ScalarMatrix& g_tgt);

/// Gram matrix of the full monomial basis (block diagonal by bidegree).
algebra::ScalarMatrix full_gram(const algebra::GramData& g, const algebra::FormBasis& basis);

enum class Operator { Dbar, DeltaBar, Delta, D };

const char* operator_name(Operator op);

/// Matrix of dbar, dbar + mu, del + mubar or d in the full basis.
algebra::ScalarMatrix operator_matrix(Operator op, const manifold::OperatorSplit& ops,
                                      const algebra::FormBasis& basis);

struct LaplacianResult {
  algebra::ScalarMatrix op;
  algebra::ScalarMatrix adjoint;
  algebra::ScalarMatrix laplacian;
  /// dim { x in Lambda^{p,q} : laplacian x = 0 } per block.
  std::map<std::pair<int, int>, std::size_t> kernel_dims;
};

LaplacianResult laplacian_invariant(Operator op, const HermitianData& h, const manifold::ManifoldSpec& spec);

/// Delta_deltabar == Delta_delta as exact matrices on invariant forms.
/// Throws NotAlmostKahler if omega is not closed.
bool check_ak_identity(const HermitianData& h, const manifold::ManifoldSpec& spec);

/// Nullity of the columns of m indexed by `cols`.
std::size_t block_nullity(const algebra::ScalarMatrix& m, const std::vector<std::size_t>& cols);

}  // namespace ahodge::hermitian
