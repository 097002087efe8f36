// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ahodge/cli/builtins.hpp"
#include "ahodge/fourier/harmonic.hpp"
#include "ahodge/hermitian/hermitian.hpp"
#include "ahodge/manifold/differential.hpp"
#include "ahodge/manifold/expression.hpp"
#include "ahodge/obstruction/obstruction.hpp"

using namespace ahodge;
using algebra::Form;
using algebra::Scalar;
using fourier::HarmonicSpace;
using fourier::ModeForm;
using fourier::ModeVector;
using manifold::ManifoldSpec;
using manifold::Overrides;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) detail << "; ";
    ok = false;
    detail << what;
  }
};

ManifoldSpec builtin(const std::string& name, const Overrides& ov = {}) {
  return manifold::load_spec(cli::builtin_manifest(name), ov);
}

Overrides abc(const std::string& a, const std::string& b, const std::string& c) {
  return {{"a", a}, {"b", b}, {"c", c}};
}

std::string label(const Overrides& ov) {
  return "(" + ov.at("a") + "," + ov.at("b") + "," + ov.at("c") + ")";
}

Form phi(const std::string& s) { return manifold::parse_expression(s, {}, 3).form; }

struct Spaces {
  std::vector<HarmonicSpace> dbar, deltabar, dol;
};

Spaces compute(const ManifoldSpec& s) {
  hermitian::HermitianData h = hermitian::metric_from_spec(s);
  Spaces out;
  for (int p = 1; p <= s.n; ++p) {
    out.dbar.push_back(fourier::harmonic_basis_dbar(p, s));
    out.deltabar.push_back(fourier::harmonic_basis_deltabar(out.dbar.back(), s, h));
    out.dol.push_back(fourier::dolbeault_basis(out.dbar.back(), s));
  }
  return out;
}

std::string dims(const std::vector<HarmonicSpace>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    out += (k ? "," : "") + (v[k].exact() ? std::to_string(v[k].dimension()) : std::string("?"));
  }
  return out + ")";
}

bool proportional(const ModeForm& a, const ModeForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [m, fa] = *a.terms().begin();
  Form fb = b.part(m);
  if (fb.is_zero()) return false;
  algebra::Mask k = fa.terms().begin()->first;
  return a == (fa.coeff(k) / fb.coeff(k)) * b;
}

bool single_basis(const HarmonicSpace& s, const ModeForm& expect) {
  return s.exact() && s.dimension() == 1 && proportional(s.basis[0], expect);
}

ModeForm invariant(const ManifoldSpec& s, const std::string& text) {
  return ModeForm(ModeVector(s.fibration.rank, 0), phi(text));
}

std::vector<Overrides> random_family_points(int count) {
  std::mt19937 rng(20241015);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
  auto nonzero = [&] {
    int v = 0;
    while (v == 0) v = num(rng);
    return v;
  };
  std::vector<Overrides> out;
  for (int k = 0; k < count; ++k) {
    std::string c = k % 2 ? std::to_string(4 * nonzero()) + "*pi"
                          : std::to_string(nonzero()) + "/" + std::to_string(den(rng)) + "*pi";
    out.push_back(abc(std::to_string(nonzero()) + "/" + std::to_string(den(rng)),
                      std::to_string(num(rng)) + "/" + std::to_string(den(rng)), c));
  }
  return out;
}

void family_tables(Outcome& o) {
  for (const auto& ov : {abc("1", "0", "1"), abc("2", "1", "2*pi"), abc("1", "0", "-3")}) {
    std::string d = dims(compute(builtin("fls", ov)).dbar);
    o.require(d == "(1,0,1)", label(ov) + " gave " + d);
  }
  for (const auto& ov : {abc("1", "0", "4*pi"), abc("3", "2", "-4*pi"), abc("1", "1", "8*pi")}) {
    std::string d = dims(compute(builtin("fls", ov)).dbar);
    o.require(d == "(1,2,1)", label(ov) + " gave " + d);
  }
}

void family_corner(Outcome& o) {
  for (const auto& ov : {abc("2", "0", "-1"), abc("-2", "0", "-1")}) {
    ManifoldSpec s = builtin("fls", ov);
    o.require(single_basis(fourier::harmonic_basis_dbar(1, s), invariant(s, "phi1")), label(ov) + " h^{1,0} basis");
  }
}

void family_deltabar_dolbeault(Outcome& o) {
  for (const auto& ov : {abc("1", "0", "1"), abc("2", "1", "2*pi"), abc("1", "0", "4*pi"), abc("3", "2", "-4*pi")}) {
    Spaces sp = compute(builtin("fls", ov));
    o.require(dims(sp.deltabar) == "(1,0,0)", label(ov) + " deltabar " + dims(sp.deltabar));
    o.require(dims(sp.dol) == "(1,0,0)", label(ov) + " Dolbeault " + dims(sp.dol));
  }
}

void non_almost_kahler(Outcome& o) {
  ManifoldSpec s = builtin("fls_nonak");
  Spaces sp = compute(s);
  o.require(single_basis(sp.dbar[0], invariant(s, "phi1")), "dbar p=1 basis");
  o.require(single_basis(sp.dbar[1], invariant(s, "phi13")), "dbar p=2 basis");
  o.require(single_basis(sp.dbar[2], invariant(s, "phi123")), "dbar p=3 basis");
  o.require(dims(sp.deltabar) == "(1,0,0)", "deltabar " + dims(sp.deltabar));
  o.require(dims(sp.dol) == "(1,0,0)", "Dolbeault " + dims(sp.dol));
}

void iwasawa(Outcome& o) {
  ManifoldSpec s = builtin("iwasawa_ak");
  Spaces sp = compute(s);
  o.require(single_basis(sp.dbar[0], invariant(s, "phi3")), "dbar p=1 basis");
  o.require(single_basis(sp.dbar[1], invariant(s, "i*phi13 + phi23")), "dbar p=2 basis");
  o.require(single_basis(sp.dbar[2], invariant(s, "phi123")), "dbar p=3 basis");
  o.require(dims(sp.deltabar) == "(1,1,0)", "deltabar " + dims(sp.deltabar));
  o.require(dims(sp.dol) == "(1,1,0)", "Dolbeault " + dims(sp.dol));
}

void obstruction_verdicts(Outcome& o) {
  using obstruction::Verdict;
  ManifoldSpec std_iw = builtin("iwasawa_std");
  auto v = obstruction::symplectic_obstruction(std_iw);
  o.require(v.verdict == Verdict::Obstructed, "iwasawa_std not obstructed");
  o.require(v.witness && *v.witness == invariant(std_iw, "phi3"), "iwasawa_std witness is not psi^3");
  o.require(obstruction::verify_witness(v, std_iw), "iwasawa_std witness certificate");
  o.require(obstruction::symplectic_obstruction(builtin("fls_nonak")).verdict == Verdict::Inconclusive,
            "fls_nonak not inconclusive");
  for (const auto& ov : random_family_points(5))
    o.require(obstruction::symplectic_obstruction(builtin("fls", ov)).verdict == Verdict::Inconclusive,
              "fls " + label(ov) + " not inconclusive");
}

void ak_identity(Outcome& o) {
  std::vector<std::pair<std::string, Overrides>> cases = {
      {"fls", abc("1", "0", "1")}, {"fls", abc("2", "1", "4*pi")}, {"fls", abc("1/3", "-2", "5")}, {"iwasawa_ak", {}}};
  for (const auto& [name, ov] : cases) {
    ManifoldSpec s = builtin(name, ov);
    hermitian::HermitianData h = hermitian::metric_from_spec(s);
    auto a = hermitian::laplacian_invariant(hermitian::Operator::DeltaBar, h, s);
    auto b = hermitian::laplacian_invariant(hermitian::Operator::Delta, h, s);
    algebra::FormBasis basis(s.n);
    for (int p = 0; p <= s.n; ++p)
      for (int q = 0; q <= s.n; ++q) {
        const auto& blk = basis.block(p, q);
        std::vector<std::size_t> rows(a.laplacian.rows());
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
        o.require(a.laplacian.submatrix(rows, blk) == b.laplacian.submatrix(rows, blk),
                  name + (ov.empty() ? "" : " " + label(ov)) + " block (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
      }
  }
}

std::vector<ModeVector> scan(const fourier::ModeMatrix& m) {
  std::vector<ModeVector> out;
  if (m.rank == 0) {
    if (!fourier::mode_kernel(m, {}).empty()) out.push_back({});
    return out;
  }
  ModeVector cur(m.rank, -25);
  while (true) {
    if (!fourier::mode_kernel(m, cur).empty()) out.push_back(cur);
    int j = m.rank - 1;
    while (j >= 0 && cur[j] == 25) cur[j--] = -25;
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

void structural(Outcome& o) {
  for (const auto& name : cli::builtin_names()) {
    ManifoldSpec s = builtin(name);
    manifold::OperatorSplit ops = manifold::split_d(s);
    o.require(ops.d.compose(ops.d).is_zero(), name + " d^2");
    for (const auto& rel : manifold::check_d2_relations(ops)) o.require(rel.holds, name + " " + rel.name);

    hermitian::HermitianData h = hermitian::metric_from_spec(s);
    algebra::LinearMap star = h.gram.star_map();
    algebra::LinearMap star2 = star.compose(star);
    for (algebra::Mask m = 0; m < (algebra::Mask(1) << (2 * s.n)); ++m) {
      int k = algebra::popcount(m);
      Form mono = Form::monomial(s.n, m);
      o.require(star2.image(m) == Scalar(k % 2 ? -1 : 1) * mono, name + " star^2 on a degree " + std::to_string(k) +
                                                                    " monomial");
    }
    algebra::FormBasis basis(s.n);
    algebra::ScalarMatrix g = hermitian::full_gram(h.gram, basis);
    for (auto op : {hermitian::Operator::Dbar, hermitian::Operator::DeltaBar, hermitian::Operator::D}) {
      algebra::ScalarMatrix m = hermitian::operator_matrix(op, ops, basis);
      algebra::ScalarMatrix adj = hermitian::operator_adjoint(m, g, g);
      o.require(hermitian::operator_adjoint(adj, g, g) == m,
                name + " adjoint involution for " + hermitian::operator_name(op));
    }
    for (int p = 1; p <= s.n; ++p) {
      auto rs = pdesolve::reduce(pdesolve::build_dbar_system(p, s), s);
      fourier::ModeMatrix mm = fourier::mode_matrix(rs, s);
      fourier::ModeSearch search = fourier::contributing_modes(mm);
      o.require(search.determined && scan(mm) == search.modes, name + " mode scan p=" + std::to_string(p));
    }
  }
}

void certificates(Outcome& o) {
  std::vector<std::pair<std::string, Overrides>> cases;
  for (const auto& name : cli::builtin_names()) cases.push_back({name, {}});
  for (const auto& ov : {abc("1", "0", "4*pi"), abc("3", "2", "-4*pi"), abc("1", "1", "8*pi"), abc("2", "0", "-1")})
    cases.push_back({"fls", ov});
  std::size_t checked = 0;
  for (const auto& [name, ov] : cases) {
    ManifoldSpec s = builtin(name, ov);
    hermitian::HermitianData h = hermitian::metric_from_spec(s);
    for (int p = 0; p <= s.n; ++p) {
      HarmonicSpace d = fourier::harmonic_basis_dbar(p, s);
      o.require(d.exact(), name + " p=" + std::to_string(p) + " undetermined");
      const std::string where = name + (ov.empty() ? "" : " " + label(ov)) + " p=" + std::to_string(p);
      for (const auto& psi : d.basis) o.require(fourier::verify_dbar_element(psi, s), where + " dbar element");
      for (const auto& psi : fourier::harmonic_basis_deltabar(d, s, h).basis)
        o.require(fourier::verify_deltabar_element(psi, s, h), where + " deltabar element");
      for (const auto& psi : fourier::dolbeault_basis(d, s).basis)
        o.require(fourier::verify_dolbeault_element(psi, s), where + " Dolbeault element");
      checked += d.dimension();
    }
  }
  o.require(checked > 0, "no basis elements checked");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"family dbar tables (1,0,1) off 4piZ and (1,2,1) on 4piZ", family_tables},
      {"family corner a = +-2, c = -1 keeps h^{1,0} = <phi^1>", family_corner},
      {"family deltabar and Dolbeault tables (1,0,0)", family_deltabar_dolbeault},
      {"non almost-Kaehler bases Phi^1, Phi^13, Phi^123; deltabar and Dolbeault (1,0,0)", non_almost_kahler},
      {"Iwasawa almost-Kaehler bases and tables (1,1,1), (1,1,0), (1,1,0)", iwasawa},
      {"obstruction verdicts", obstruction_verdicts},
      {"Laplacian identity deltabar = delta on every invariant block", ak_identity},
      {"structural suites: d^2, relations, star^2, adjoint involution, mode scan", structural},
      {"basis certificates re-verified", certificates},
  };
  int failures = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << index << "] " << name << " (" << t.str() << " s)";
    if (!o.ok) std::cout << ": " << o.detail.str();
    std::cout << "\n";
    if (!o.ok) ++failures;
  }
  std::cout << (failures ? "FAILED " + std::to_string(failures) + " of 9" : std::string("all 9 criteria passed"))
            << "\n";
  return failures ? 1 : 0;
}
