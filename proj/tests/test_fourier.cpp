#include "ahodge/cli/builtins.hpp"
#include "ahodge/fourier/harmonic.hpp"
#include "ahodge/fourier/polysolve.hpp"
#include "ahodge/manifold/expression.hpp"
#include "doctest.h"

using namespace ahodge;
using namespace ahodge::algebra;
using namespace ahodge::fourier;
using manifold::ManifoldSpec;
using manifold::Overrides;

namespace {

ManifoldSpec builtin(const std::string& name, const Overrides& ov = {}) {
  return manifold::load_spec(cli::builtin_manifest(name), ov);
}

Form phi(const std::string& s) { return manifold::parse_expression(s, {}, 3).form; }

bool proportional(const ModeForm& a, const ModeForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [m, fa] = *a.terms().begin();
  Form fb = b.part(m);
  if (fb.is_zero()) return false;
  Mask k = fa.terms().begin()->first;
  Scalar s = fa.coeff(k) / fb.coeff(k);
  return a == s * b;
}

bool contains_proportional(const std::vector<ModeForm>& basis, const ModeForm& f) {
  for (const auto& b : basis)
    if (proportional(b, f)) return true;
  return false;
}

ModeMatrix matrix_for(int p, const ManifoldSpec& s) {
  return mode_matrix(pdesolve::reduce(pdesolve::build_dbar_system(p, s), s), s);
}

QMPoly poly2(std::initializer_list<std::pair<Exponents, long>> terms) {
  QMPoly p(2);
  for (const auto& [e, c] : terms) p.add(e, mpq_class(c));
  return p;
}

// Brute-force scan of the box |m_j| <= 25.
std::vector<ModeVector> scan(const ModeMatrix& m) {
  std::vector<ModeVector> out;
  const int r = m.rank;
  if (r == 0) {
    if (!mode_kernel(m, {}).empty()) out.push_back({});
    return out;
  }
  ModeVector cur(r, -25);
  while (true) {
    if (!mode_kernel(m, cur).empty()) out.push_back(cur);
    int j = r - 1;
    while (j >= 0 && cur[j] == 25) cur[j--] = -25;
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

const std::vector<Overrides> kFamilyPoints = {
    {{"a", "1"}, {"b", "0"}, {"c", "1"}},       {{"a", "1"}, {"b", "0"}, {"c", "4*pi"}},
    {{"a", "2"}, {"b", "0"}, {"c", "-1"}},      {{"a", "3"}, {"b", "2"}, {"c", "-4*pi"}},
    {{"a", "1"}, {"b", "1"}, {"c", "8*pi"}},    {{"a", "2"}, {"b", "1"}, {"c", "2*pi"}},
};

}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("integer roots and resultants") {
    // (x - 3)(x + 2)(2x - 1) = 2x^3 - 3x^2 - 11x + 6
    QPoly p(std::vector<mpq_class>{6, -11, -3, 2});
    auto roots = integer_roots(p, 1000);
    REQUIRE(roots);
    CHECK(*roots == std::vector<long>{-2, 3});
    // x^2 (x - 7)
    CHECK(*integer_roots(QPoly(std::vector<mpq_class>{0, 0, -7, 1}), 100) == std::vector<long>{0, 7});
    CHECK_FALSE(integer_roots(QPoly(std::vector<mpq_class>{-5000, 1}), 100));
    // Res_y(x - y, x + y - 2) vanishes exactly at x = 1
    QMPoly f = poly2({{{1, 0}, 1}, {{0, 1}, -1}});
    QMPoly g = poly2({{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -2}});
    QPoly res = resultant(f, g, 1);
    CHECK(res.degree() == 1);
    CHECK(res.eval(1) == 0);
    auto sols = integer_solutions({f, g}, 2, 100);
    REQUIRE(sols);
    CHECK(*sols == std::vector<std::vector<long>>{{1, 1}});
    // x^2 + y^2 - 25 and x*y - 12
    QMPoly c = poly2({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -25}});
    QMPoly h = poly2({{{1, 1}, 1}, {{0, 0}, -12}});
    sols = integer_solutions({c, h}, 2, 1000);
    REQUIRE(sols);
    CHECK(*sols == std::vector<std::vector<long>>{{-4, -3}, {-3, -4}, {3, 4}, {4, 3}});
    // x*y alone has infinitely many zeros
    CHECK_FALSE(integer_solutions({poly2({{{1, 1}, 1}})}, 2, 1000));
  }

  TEST_CASE("mode matrix evaluation") {
    ManifoldSpec s = builtin("fls", {{"c", "3"}});
    ModeMatrix m = matrix_for(2, s);
    ModeVector mode{2, -1};
    ScalarMatrix e = m.eval(mode);
    auto cols = m.active_columns(mode);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const Affine& a = m.at(r, cols[c]);
        CHECK(e(r, c) == a.s0 + Scalar(2) * a.s[0] - a.s[1]);
      }
    // constant unknowns only appear at mode 0
    CHECK(m.eval({0, 0}).cols() == m.cols());
    CHECK(m.eval(mode).cols() < m.cols());
  }

  TEST_CASE("contributing modes") {
    ManifoldSpec k1 = builtin("fls", {{"c", "4*pi"}});
    ModeMatrix m = matrix_for(2, k1);
    ModeSearch s = contributing_modes(m);
    REQUIRE(s.determined);
    CHECK(s.modes == std::vector<ModeVector>{{-1, 0}, {1, 0}});
    for (const auto& mode : s.modes) CHECK(mode_kernel(m, mode).size() == 1);

    ManifoldSpec k2 = builtin("fls", {{"c", "8*pi"}});
    CHECK(contributing_modes(matrix_for(2, k2)).modes == std::vector<ModeVector>{{-2, 0}, {2, 0}});

    ManifoldSpec half = builtin("fls", {{"c", "2*pi"}});
    ModeSearch h = contributing_modes(matrix_for(2, half));
    CHECK(h.determined);
    CHECK(h.modes.empty());

    ManifoldSpec corner = builtin("fls", {{"a", "2"}, {"c", "-1"}});
    ModeMatrix mc = matrix_for(1, corner);
    ModeSearch sc = contributing_modes(mc);
    CHECK(sc.modes == std::vector<ModeVector>{{0, 0}});
    auto k = mode_kernel(mc, {0, 0});
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0)});
  }

  TEST_CASE("a tiny cap leaves the search undetermined") {
    ManifoldSpec s = builtin("fls", {{"c", "400*pi"}});
    CHECK_FALSE(contributing_modes(matrix_for(2, s), 10).determined);
    HarmonicSpace h = harmonic_basis_dbar(2, s, FourierOptions{10});
    CHECK(h.status == SpaceStatus::Undetermined);
    CHECK_FALSE(h.reason.empty());
    HarmonicSpace full = harmonic_basis_dbar(2, s);
    CHECK(full.exact());
    CHECK(full.dimension() == 2);
  }

  TEST_CASE("family bases") {
    for (const auto& ov : kFamilyPoints) {
      ManifoldSpec s = builtin("fls", ov);
      CAPTURE(ov.at("c"));
      HarmonicSpace h1 = harmonic_basis_dbar(1, s);
      REQUIRE(h1.dimension() == 1);
      CHECK(h1.basis[0] == ModeForm({0, 0}, phi("phi1")));
      CHECK(harmonic_basis_dbar(3, s).dimension() == 1);
    }
    ManifoldSpec s = builtin("fls", {{"c", "4*pi"}});
    HarmonicSpace h2 = harmonic_basis_dbar(2, s);
    REQUIRE(h2.dimension() == 2);
    CHECK(contains_proportional(h2.basis, ModeForm({1, 0}, phi("phi12 - phi13"))));
    CHECK(contains_proportional(h2.basis, ModeForm({-1, 0}, phi("phi12 + phi13"))));
    hermitian::HermitianData h = hermitian::metric_from_spec(s);
    CHECK(harmonic_basis_deltabar(h2, s, h).dimension() == 0);
    CHECK(dolbeault_basis(h2, s).dimension() == 0);
  }

  TEST_CASE("Iwasawa and non almost-Kaehler bases") {
    ManifoldSpec iw = builtin("iwasawa_ak");
    hermitian::HermitianData h = hermitian::metric_from_spec(iw);
    HarmonicSpace h2 = harmonic_basis_dbar(2, iw);
    REQUIRE(h2.dimension() == 1);
    CHECK(proportional(h2.basis[0], ModeForm({0, 0}, phi("i*phi13 + phi23"))));
    CHECK(harmonic_basis_deltabar(h2, iw, h).dimension() == 1);
    CHECK(dolbeault_basis(h2, iw).dimension() == 1);

    ManifoldSpec non = builtin("fls_nonak");
    HarmonicSpace n2 = harmonic_basis_dbar(2, non);
    REQUIRE(n2.dimension() == 1);
    CHECK(n2.basis[0] == ModeForm({0, 0}, phi("phi13")));
    CHECK(dolbeault_basis(n2, non).dimension() == 0);
  }

  TEST_CASE("mode-weighted d squares to zero") {
    for (const auto& name : cli::builtin_names()) {
      CAPTURE(name);
      ManifoldSpec s = builtin(name);
      ModeVector mode(s.fibration.rank, 0);
      if (!mode.empty()) mode[0] = 2;
      if (mode.size() > 1) mode[1] = -3;
      for (const char* text : {"phi1 + 2*phi2", "phi12 + i*phi3b", "phi1b2 - phi3"}) {
        ModeForm f(mode, phi(text));
        ModeForm df = exterior_d(f, s);
        CHECK(exterior_d(df, s).is_zero());
        // the (p,q+1) part of d is dbar
        ModeForm expect = dbar(f, s);
        ModeForm got(3);
        for (const auto& [m, alpha] : df.terms())
          for (const auto& [pq, part] : alpha.bidegree_split())
            for (const auto& [src, unused] : f.part(m).bidegree_split())
              if (pq.first == src.first && pq.second == src.second + 1) got = got + ModeForm(m, part);
        CHECK(got == expect);
      }
      CHECK(exterior_d(ModeForm(ModeVector(s.fibration.rank, 0), phi("phi2")), s) ==
            ModeForm(ModeVector(s.fibration.rank, 0), manifold::exterior_d(phi("phi2"), s)));
    }
  }

  TEST_CASE("basis certificates and mode-0 consistency") {
    std::vector<std::pair<std::string, Overrides>> cases;
    for (const auto& name : cli::builtin_names()) cases.push_back({name, {}});
    for (const auto& ov : kFamilyPoints) cases.push_back({"fls", ov});
    for (const auto& [name, ov] : cases) {
      CAPTURE(name);
      ManifoldSpec s = builtin(name, ov);
      hermitian::HermitianData h = hermitian::metric_from_spec(s);
      auto lap = hermitian::laplacian_invariant(hermitian::Operator::Dbar, h, s);
      for (int p = 0; p <= s.n; ++p) {
        CAPTURE(p);
        HarmonicSpace d = harmonic_basis_dbar(p, s);
        REQUIRE(d.exact());
        CHECK(independent(d.basis));
        std::size_t invariant = 0;
        for (const auto& psi : d.basis) {
          CHECK(verify_dbar_element(psi, s));
          if (psi.terms().count(ModeVector(s.fibration.rank, 0))) ++invariant;
        }
        CHECK(invariant == lap.kernel_dims.at({p, 0}));
        HarmonicSpace db = harmonic_basis_deltabar(d, s, h);
        CHECK(independent(db.basis));
        for (const auto& psi : db.basis) CHECK(verify_deltabar_element(psi, s, h));
        HarmonicSpace dol = dolbeault_basis(d, s);
        for (const auto& psi : dol.basis) CHECK(verify_dolbeault_element(psi, s));
      }
    }
  }

  TEST_CASE("bounded scan agrees with contributing modes") {
    std::vector<std::pair<std::string, Overrides>> cases;
    for (const auto& name : cli::builtin_names()) cases.push_back({name, {}});
    cases.push_back({"fls", {{"c", "4*pi"}}});
    cases.push_back({"fls", {{"a", "2"}, {"c", "-1"}}});
    cases.push_back({"fls", {{"a", "3"}, {"b", "2"}, {"c", "-4*pi"}}});
    for (const auto& [name, ov] : cases) {
      ManifoldSpec s = builtin(name, ov);
      for (int p = 1; p <= s.n; ++p) {
        CAPTURE(name);
        CAPTURE(p);
        ModeMatrix m = matrix_for(p, s);
        ModeSearch search = contributing_modes(m);
        REQUIRE(search.determined);
        CHECK(scan(m) == search.modes);
      }
    }
  }

  TEST_CASE("rendering") {
    ModeForm f({1, 0}, phi("phi12 - phi13"));
    CHECK(f.to_string({"x", "t/a0"}) == "e^{2πi(x)}(φ^{12} - φ^{13})");
    CHECK(f.to_ascii({"x", "t/a0"}) == "exp(2*pi*i*(x))*(phi12 - phi13)");
    ModeForm g({-2, 1}, phi("phi1"));
    CHECK(g.to_string({"x", "t"}) == "e^{2πi(-2x + t)}(φ^{1})");
    CHECK(ModeForm({0, 0}, phi("phi1")).to_string({"x", "t"}) == "φ^{1}");
  }
}
