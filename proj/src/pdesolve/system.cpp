/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/pdesolve/system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ahodge/manifold/differential.hpp"

namespace ahodge::pdesolve {

using algebra::Form;
using algebra::Mask;
using algebra::Scalar;

const char* status_name(Status s) {
  switch (s) {
    case Status::Free: return "free";
    case Status::BaseOnly: return "base_only";
    case Status::Constant: return "constant";
    case Status::Zero: return "zero";
  }
  return "?";
}

namespace {

std::string coefficient_text(const Scalar& c) {
  if (c.is_one()) return "";
  if ((-c).is_one()) return "-";
  std::string s = c.to_string();
  if (c.is_real() && c.re().is_polynomial() && c.re().num().is_constant()) return s + "*";
  if (c.re().is_zero() && c.im().is_polynomial() && c.im().num().is_constant()) {
    std::string r = Scalar(c.im()).to_string();
    if (r == "1") return "i*";
    if (r == "-1") return "-i*";
    return r + "*i*";
  }
  if (s.find_first_of("+ ") != std::string::npos || s.find('/') != std::string::npos) return "(" + s + ")*";
  return s + "*";
}

bool settled(Status s) { return s == Status::BaseOnly || s == Status::Constant || s == Status::Zero; }
bool constant(Status s) { return s == Status::Constant || s == Status::Zero; }

// The equation whose only derivative term is conj(V_i) applied to f.
const Equation* carrier(const PDESystem& sys, int f, int i) {
  for (const auto& e : sys.equations)
    if (e.derivs.size() == 1 && e.derivs[0].unknown == f && e.derivs[0].frame == i) return &e;
  return nullptr;
}

bool fiber_ok(const Equation& e, const std::vector<Status>& st) {
  return std::all_of(e.zero.begin(), e.zero.end(), [&](const ZeroTerm& z) { return settled(st[z.unknown]); });
}

bool global_ok(const Equation& e, int i, const std::vector<Status>& st, const manifold::ManifoldSpec& spec) {
  if (e.zero.empty()) return true;
  if (spec.fibration.vectors[i].pure_fiber && fiber_ok(e, st)) return true;
  return std::all_of(e.zero.begin(), e.zero.end(), [&](const ZeroTerm& z) { return constant(st[z.unknown]); });
}

// Tries the fiber rule on f; fills the equation ids on success.
bool fiber_rule(const PDESystem& sys, int f, const std::vector<Status>& st, const manifold::ManifoldSpec& spec,
                std::vector<std::size_t>& used) {
  const auto& span = spec.fibration.fiber_span;
  if (span.empty()) return false;
  used.clear();
  for (int i : span) {
    if (!spec.fibration.vectors[i].pure_fiber) return false;
    const Equation* e = carrier(sys, f, i);
    if (!e || !fiber_ok(*e, st)) return false;
    used.push_back(e->id);
  }
  return true;
}

bool global_rule(const PDESystem& sys, int f, const std::vector<Status>& st, const manifold::ManifoldSpec& spec,
                 std::vector<std::size_t>& used) {
  used.clear();
  for (int i = 0; i < sys.n; ++i) {
    const Equation* e = carrier(sys, f, i);
    if (!e || !global_ok(*e, i, st, spec)) return false;
    used.push_back(e->id);
  }
  return true;
}

const Equation* by_id(const PDESystem& sys, std::size_t id) {
  for (const auto& e : sys.equations)
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace

std::string PDESystem::equation_string(const Equation& e) const {
  std::string out;
  auto append = [&](const Scalar& c, const std::string& body) {
    std::string t = coefficient_text(c) + body;
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  };
  for (const auto& d : e.derivs) append(d.coeff, "Vb" + std::to_string(d.frame + 1) + "(" + names[d.unknown] + ")");
  for (const auto& z : e.zero) append(z.coeff, names[z.unknown]);
  if (out.empty()) out = "0";
  return out + " = 0";
}

bool operator==(const PDESystem& a, const PDESystem& b) {
  if (a.n != b.n || a.p != b.p || a.unknowns != b.unknowns || a.status != b.status) return false;
  if (a.equations.size() != b.equations.size()) return false;
  for (std::size_t k = 0; k < a.equations.size(); ++k) {
    const auto& x = a.equations[k];
    const auto& y = b.equations[k];
    if (x.id != y.id || x.output != y.output || x.derivs.size() != y.derivs.size() || x.zero.size() != y.zero.size())
      return false;
    for (std::size_t j = 0; j < x.derivs.size(); ++j)
      if (x.derivs[j].frame != y.derivs[j].frame || x.derivs[j].unknown != y.derivs[j].unknown ||
          !(x.derivs[j].coeff == y.derivs[j].coeff))
        return false;
    for (std::size_t j = 0; j < x.zero.size(); ++j)
      if (x.zero[j].unknown != y.zero[j].unknown || !(x.zero[j].coeff == y.zero[j].coeff)) return false;
  }
  return true;
}

PDESystem build_dbar_system(int p, const manifold::ManifoldSpec& spec) {
  const int n = spec.n;
  PDESystem sys;
  sys.n = n;
  sys.p = p;
  sys.unknowns = algebra::monomials(n, p, 0);
  for (std::size_t k = 0; k < sys.unknowns.size(); ++k) sys.names.push_back(std::string(1, char('A' + k)));
  sys.status.assign(sys.unknowns.size(), Status::Free);
  manifold::OperatorSplit ops = manifold::split_d(spec);
  std::map<Mask, int> index;
  for (std::size_t k = 0; k < sys.unknowns.size(); ++k) index[sys.unknowns[k]] = static_cast<int>(k);
  const Scalar sign(p % 2 ? -1 : 1);
  // One equation per output monomial phi^{J ibar}, ordered by (J, i).
  for (std::size_t j = 0; j < sys.unknowns.size(); ++j)
    for (int i = 0; i < n; ++i) {
      Equation e;
      e.id = sys.equations.size();
      e.output = sys.unknowns[j] | (Mask(1) << (n + i));
      e.derivs.push_back({i, static_cast<int>(j), sign});
      for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
        Scalar c = ops.delbar.image(sys.unknowns[k]).coeff(e.output);
        if (!c.is_zero()) e.zero.push_back({static_cast<int>(k), c});
      }
      sys.equations.push_back(std::move(e));
    }
  return sys;
}

PDESystem infer_fiber_constancy(const PDESystem& sys, const manifold::ManifoldSpec& spec) {
  PDESystem out = sys;
  std::vector<std::size_t> used;
  for (std::size_t f = 0; f < out.unknowns.size(); ++f) {
    if (out.status[f] != Status::Free) continue;
    if (fiber_rule(out, static_cast<int>(f), out.status, spec, used)) {
      out.certificates.push_back({static_cast<int>(f), Status::Free, Status::BaseOnly, "fiber", used, out.status});
      out.status[f] = Status::BaseOnly;
    }
  }
  return out;
}

PDESystem infer_global_constancy(const PDESystem& sys, const manifold::ManifoldSpec& spec) {
  PDESystem out = sys;
  std::vector<std::size_t> used;
  for (std::size_t f = 0; f < out.unknowns.size(); ++f) {
    if (constant(out.status[f])) continue;
    if (global_rule(out, static_cast<int>(f), out.status, spec, used)) {
      out.certificates.push_back({static_cast<int>(f), out.status[f], Status::Constant, "global", used, out.status});
      out.status[f] = Status::Constant;
    }
  }
  return out;
}

ReducedSystem reduce(const PDESystem& sys, const manifold::ManifoldSpec& spec) {
  PDESystem cur = sys;
  while (true) {
    PDESystem next = infer_global_constancy(infer_fiber_constancy(cur, spec), spec);
    bool changed = next.status != cur.status;
    cur = std::move(next);
    if (!changed) break;
  }
  std::vector<Equation> kept;
  for (const auto& e : cur.equations) {
    Equation r = e;
    r.derivs.clear();
    for (const auto& d : e.derivs) {
      Status s = cur.status[d.unknown];
      if (constant(s)) continue;
      if (s == Status::BaseOnly && spec.fibration.vectors[d.frame].pure_fiber) continue;
      r.derivs.push_back(d);
    }
    if (!r.is_trivial()) kept.push_back(std::move(r));
  }
  cur.equations = std::move(kept);
  return cur;
}

bool verify_certificate(const PDESystem& original, const Certificate& cert, const manifold::ManifoldSpec& spec) {
  if (cert.context.size() != original.unknowns.size()) return false;
  const int f = cert.unknown;
  if (cert.rule == "fiber") {
    const auto& span = spec.fibration.fiber_span;
    if (span.empty() || cert.equations.size() != span.size() || cert.to != Status::BaseOnly) return false;
    for (std::size_t k = 0; k < span.size(); ++k) {
      const Equation* e = by_id(original, cert.equations[k]);
      if (!e || e->derivs.size() != 1 || e->derivs[0].unknown != f || e->derivs[0].frame != span[k]) return false;
      if (!spec.fibration.vectors[span[k]].pure_fiber || !fiber_ok(*e, cert.context)) return false;
    }
    return true;
  }
  if (cert.rule == "global") {
    if (static_cast<int>(cert.equations.size()) != original.n || cert.to != Status::Constant) return false;
    for (int i = 0; i < original.n; ++i) {
      const Equation* e = by_id(original, cert.equations[i]);
      if (!e || e->derivs.size() != 1 || e->derivs[0].unknown != f || e->derivs[0].frame != i) return false;
      if (!global_ok(*e, i, cert.context, spec)) return false;
    }
    return true;
  }
  return false;
}

}  // namespace ahodge::pdesolve
