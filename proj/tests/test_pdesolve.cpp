#include <algorithm>

#include "ahodge/cli/builtins.hpp"
#include "ahodge/pdesolve/system.hpp"
#include "doctest.h"

using namespace ahodge;
using namespace ahodge::pdesolve;
using manifold::ManifoldSpec;
using manifold::Overrides;

namespace {

ManifoldSpec builtin(const std::string& name, const Overrides& ov = {}) {
  return manifold::load_spec(cli::builtin_manifest(name), ov);
}

std::vector<std::string> rendered(const PDESystem& s) {
  std::vector<std::string> out;
  for (const auto& e : s.equations) out.push_back(s.equation_string(e));
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_SUITE("pdesolve") {
  TEST_CASE("equations of the top degree") {
    ManifoldSpec s = builtin("fls");
    PDESystem sys = build_dbar_system(3, s);
    REQUIRE(sys.unknowns.size() == 1);
    CHECK(sys.equations.size() == 3);
    for (const auto& e : sys.equations) {
      CHECK(e.zero.empty());
      CHECK(e.derivs.size() == 1);
    }
    CHECK(rendered(sys)[0] == "-Vb1(A) = 0");
    ReducedSystem r = reduce(sys, s);
    CHECK(r.status[0] == Status::Constant);
    CHECK(r.equations.empty());
  }

  TEST_CASE("equations in degree one") {
    ManifoldSpec s = builtin("fls", {{"c", "3"}});
    auto eqs = rendered(build_dbar_system(1, s));
    CHECK(eqs.size() == 9);
    // unknowns A, B, C are the coefficients of phi^1, phi^2, phi^3
    CHECK(contains(eqs, "-Vb1(B) + 3/4*C = 0"));
    CHECK(contains(eqs, "-Vb1(C) + 3/4*B = 0"));
    ManifoldSpec iw = builtin("iwasawa_ak");
    auto iweqs = rendered(build_dbar_system(1, iw));
    CHECK(contains(iweqs, "-Vb3(A) + 1/4*A - 1/4*i*B = 0"));
  }

  TEST_CASE("constancy conclusions") {
    ManifoldSpec s = builtin("fls");
    ReducedSystem r1 = reduce(build_dbar_system(1, s), s);
    CHECK(r1.status == std::vector<Status>{Status::Constant, Status::BaseOnly, Status::BaseOnly});
    CHECK(r1.equations.size() == 4);
    ReducedSystem r2 = reduce(build_dbar_system(2, s), s);
    CHECK(r2.status[2] == Status::Constant);
    ManifoldSpec non = builtin("fls_nonak");
    ReducedSystem rn = reduce(build_dbar_system(1, non), non);
    CHECK(rn.status == std::vector<Status>(3, Status::Constant));
    ManifoldSpec iw = builtin("iwasawa_ak");
    ReducedSystem ri = reduce(build_dbar_system(1, iw), iw);
    CHECK(ri.status[0] == Status::BaseOnly);
    CHECK(ri.status[2] == Status::Constant);
  }

  TEST_CASE("reduction is idempotent and certified") {
    for (const auto& name : cli::builtin_names()) {
      ManifoldSpec s = builtin(name);
      for (int p = 0; p <= s.n; ++p) {
        CAPTURE(name);
        CAPTURE(p);
        PDESystem sys = build_dbar_system(p, s);
        ReducedSystem r = reduce(sys, s);
        ReducedSystem rr = reduce(r, s);
        CHECK(rr.status == r.status);
        CHECK(rr.equations.size() == r.equations.size());
        for (const auto& c : r.certificates) CHECK(verify_certificate(sys, c, s));
        // statuses only tighten
        for (std::size_t f = 0; f < r.status.size(); ++f) CHECK(r.status[f] >= sys.status[f]);
      }
    }
  }

  TEST_CASE("tampered certificates are rejected") {
    ManifoldSpec s = builtin("fls");
    PDESystem sys = build_dbar_system(1, s);
    ReducedSystem r = reduce(sys, s);
    REQUIRE_FALSE(r.certificates.empty());
    for (auto c : r.certificates) {
      Certificate bad = c;
      bad.unknown = (c.unknown + 1) % 3;
      CHECK_FALSE(verify_certificate(sys, bad, s));
      bad = c;
      bad.context.assign(bad.context.size(), Status::Free);
      // with nothing settled, only remainder-free carriers still qualify
      bool remainder_free = true;
      for (auto id : c.equations) remainder_free = remainder_free && sys.equations[id].zero.empty();
      CHECK(verify_certificate(sys, bad, s) == remainder_free);
    }
  }
}
