/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/manifold/differential.hpp"

#include "ahodge/error.hpp"

namespace ahodge::manifold {

using algebra::Form;
using algebra::LinearMap;
using algebra::Mask;
using algebra::Scalar;

LinearMap antiderivation(int n, const std::vector<Form>& images) {
  LinearMap d(n);
  const Mask full = Mask(1) << (2 * n);
  for (Mask m = 1; m < full; ++m) {
    Form out(n);
    int pos = 0;
    for (int k = 0; k < 2 * n; ++k) {
      Mask bit = Mask(1) << k;
      if (!(m & bit)) continue;
      Mask before = m & (bit - 1);
      Mask after = m & ~(bit | (bit - 1));
      Form term = algebra::wedge(Form::monomial(n, before), images.at(k));
      term = algebra::wedge(term, Form::monomial(n, after));
      out += (pos % 2) ? -term : term;
      ++pos;
    }
    d.set_image(m, std::move(out));
  }
  return d;
}

Form exterior_d(const Form& f, const ManifoldSpec& spec) {
  return spec.d_phi.apply(f);
}

Form exterior_d_real(const Form& f, const ManifoldSpec& spec) {
  if (!spec.has_real_frame) throw ValidationError("manifold '" + spec.name + "' declares no real coframe");
  return spec.d_e.apply(f);
}

OperatorSplit split_d(const ManifoldSpec& spec) {
  const int n = spec.n;
  OperatorSplit ops{spec.d_phi, LinearMap(n), LinearMap(n), LinearMap(n), LinearMap(n)};
  const Mask full = Mask(1) << (2 * n);
  for (Mask m = 0; m < full; ++m) {
    auto [p, q] = algebra::bidegree(m, n);
    Form parts[4] = {Form(n), Form(n), Form(n), Form(n)};
    for (const auto& [pq, f] : ops.d.image(m).bidegree_split()) {
      int dp = pq.first - p, dq = pq.second - q;
      if (dp == 2 && dq == -1) parts[0] = f;
      else if (dp == 1 && dq == 0) parts[1] = f;
      else if (dp == 0 && dq == 1) parts[2] = f;
      else if (dp == -1 && dq == 2) parts[3] = f;
      else throw ValidationError("d has a component of bidegree shift (" + std::to_string(dp) + "," +
                                 std::to_string(dq) + ")");
    }
    ops.mu.set_image(m, parts[0]);
    ops.del.set_image(m, parts[1]);
    ops.delbar.set_image(m, parts[2]);
    ops.mubar.set_image(m, parts[3]);
  }
  return ops;
}

std::vector<RelationCheck> check_d2_relations(const OperatorSplit& o) {
  auto c = [](const LinearMap& a, const LinearMap& b) { return a.compose(b); };
  std::vector<RelationCheck> out;
  out.push_back({"mu^2 = 0", c(o.mu, o.mu).is_zero()});
  out.push_back({"mu del + del mu = 0", (c(o.mu, o.del) + c(o.del, o.mu)).is_zero()});
  out.push_back({"del^2 + mu delbar + delbar mu = 0",
                 (c(o.del, o.del) + c(o.mu, o.delbar) + c(o.delbar, o.mu)).is_zero()});
  out.push_back({"del delbar + delbar del + mu mubar + mubar mu = 0",
                 (c(o.del, o.delbar) + c(o.delbar, o.del) + c(o.mu, o.mubar) + c(o.mubar, o.mu)).is_zero()});
  out.push_back({"delbar^2 + mubar del + del mubar = 0",
                 (c(o.delbar, o.delbar) + c(o.mubar, o.del) + c(o.del, o.mubar)).is_zero()});
  out.push_back({"mubar delbar + delbar mubar = 0", (c(o.mubar, o.delbar) + c(o.delbar, o.mubar)).is_zero()});
  out.push_back({"mubar^2 = 0", c(o.mubar, o.mubar).is_zero()});
  return out;
}

std::vector<RelationCheck> check_d2_relations(const ManifoldSpec& spec) { return check_d2_relations(split_d(spec)); }

bool is_integrable(const OperatorSplit& ops) {
  int n = ops.d.n();
  for (int k = 0; k < 2 * n; ++k) {
    Mask m = Mask(1) << k;
    if (!ops.mu.image(m).is_zero() || !ops.mubar.image(m).is_zero()) return false;
  }
  return true;
}

bool is_integrable(const ManifoldSpec& spec) { return is_integrable(split_d(spec)); }

}  // namespace ahodge::manifold
