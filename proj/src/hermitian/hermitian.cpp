/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/hermitian/hermitian.hpp"

#include "ahodge/error.hpp"

namespace ahodge::hermitian {

using algebra::Form;
using algebra::FormBasis;
using algebra::Mask;
using algebra::Scalar;
using algebra::ScalarMatrix;

HermitianData metric_from_pair(const Form& omega, const manifold::ManifoldSpec& spec, unsigned bits) {
  const int n = spec.n;
  if (!(omega.conj() == omega)) throw NotCompatible("omega is not a real form");
  for (const auto& [pq, part] : omega.bidegree_split())
    if (pq != std::make_pair(1, 1))
      throw NotCompatible("omega has a component of type (" + std::to_string(pq.first) + "," +
                          std::to_string(pq.second) + "): " + part.to_string());
  // omega = (i/2) sum h_jk phi^j ^ phibar^k, so h_jk = -2i coef.
  ScalarMatrix h(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      h(j, k) = Scalar(-2) * Scalar::i() * omega.coeff((Mask(1) << j) | (Mask(1) << (n + k)));
  ScalarMatrix hinv;
  try {
    hinv = algebra::inverse(h);
  } catch (const DivisionByZero&) {
    throw NotPositive("omega is degenerate");
  }
  ScalarMatrix gram = Scalar(2) * hinv.transpose();
  HermitianData out{algebra::GramData(gram, spec.orientation, bits), omega, true, false};
  out.is_almost_kahler = is_almost_kahler(out, spec);
  return out;
}

HermitianData metric_from_spec(const manifold::ManifoldSpec& spec, unsigned bits) {
  if (spec.metric.kind == manifold::MetricSource::Kind::Omega) return metric_from_pair(spec.metric.omega, spec, bits);
  const int n = spec.n;
  algebra::GramData g(spec.metric.gram, spec.orientation, bits);
  ScalarMatrix h = Scalar(2) * algebra::inverse(spec.metric.gram.transpose());
  Form omega(n);
  Scalar half_i = Scalar::rational(1, 2) * Scalar::i();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) omega.add((Mask(1) << j) | (Mask(1) << (n + k)), half_i * h(j, k));
  HermitianData out{g, omega, true, false};
  out.is_almost_kahler = is_almost_kahler(out, spec);
  return out;
}

bool is_almost_kahler(const HermitianData& h, const manifold::ManifoldSpec& spec) {
  return manifold::exterior_d(h.omega, spec).is_zero();
}

ScalarMatrix operator_adjoint(const ScalarMatrix& m, const ScalarMatrix& g_src, const ScalarMatrix& g_tgt) {
  return algebra::inverse(g_src.conjugate()) * m.conj_transpose() * g_tgt.conjugate();
}

ScalarMatrix full_gram(const algebra::GramData& g, const FormBasis& basis) {
  ScalarMatrix out(basis.size(), basis.size());
  const int n = basis.n();
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const auto& blk = basis.block(p, q);
      for (std::size_t s : blk)
        for (std::size_t t : blk) out(s, t) = g.inner(basis.masks()[s], basis.masks()[t]);
    }
  return out;
}

const char* operator_name(Operator op) {
  switch (op) {
    case Operator::Dbar: return "dbar";
    case Operator::DeltaBar: return "deltabar";
    case Operator::Delta: return "delta";
    case Operator::D: return "d";
  }
  return "?";
}

ScalarMatrix operator_matrix(Operator op, const manifold::OperatorSplit& ops, const FormBasis& basis) {
  switch (op) {
    case Operator::Dbar: return ops.delbar.matrix(basis);
    case Operator::DeltaBar: return (ops.delbar + ops.mu).matrix(basis);
    case Operator::Delta: return (ops.del + ops.mubar).matrix(basis);
    case Operator::D: return ops.d.matrix(basis);
  }
  throw ValidationError("unknown operator");
}

namespace {

// conj(G)^-1 for the block-diagonal full Gram matrix, inverted block by block.
ScalarMatrix inverse_conj_gram(const ScalarMatrix& g, const FormBasis& basis) {
  ScalarMatrix out(basis.size(), basis.size());
  const int n = basis.n();
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const auto& blk = basis.block(p, q);
      ScalarMatrix inv = algebra::inverse(g.submatrix(blk, blk).conjugate());
      for (std::size_t s = 0; s < blk.size(); ++s)
        for (std::size_t t = 0; t < blk.size(); ++t) out(blk[s], blk[t]) = inv(s, t);
    }
  return out;
}

}  // namespace

std::size_t block_nullity(const ScalarMatrix& m, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
  return cols.size() - algebra::rank(m.submatrix(rows, cols));
}

LaplacianResult laplacian_invariant(Operator op, const HermitianData& h, const manifold::ManifoldSpec& spec) {
  FormBasis basis(spec.n);
  manifold::OperatorSplit ops = manifold::split_d(spec);
  ScalarMatrix g = full_gram(h.gram, basis);
  LaplacianResult r;
  r.op = operator_matrix(op, ops, basis);
  r.adjoint = inverse_conj_gram(g, basis) * r.op.conj_transpose() * g.conjugate();
  r.laplacian = r.op * r.adjoint + r.adjoint * r.op;
  for (int p = 0; p <= spec.n; ++p)
    for (int q = 0; q <= spec.n; ++q) r.kernel_dims[{p, q}] = block_nullity(r.laplacian, basis.block(p, q));
  return r;
}

bool check_ak_identity(const HermitianData& h, const manifold::ManifoldSpec& spec) {
  if (!is_almost_kahler(h, spec)) throw NotAlmostKahler("omega is not closed on " + spec.name);
  return laplacian_invariant(Operator::DeltaBar, h, spec).laplacian ==
         laplacian_invariant(Operator::Delta, h, spec).laplacian;
}

}  // namespace ahodge::hermitian
