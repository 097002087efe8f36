#include <random>

#include "ahodge/algebra/form.hpp"
#include "ahodge/algebra/interval.hpp"
#include "ahodge/algebra/matrix.hpp"
#include "ahodge/error.hpp"
#include "doctest.h"

using namespace ahodge;
using namespace ahodge::algebra;

namespace {

const Scalar kPi = Scalar::pi();
const Scalar kI = Scalar::i();

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<int> shape(0, 3);
  Scalar s = Scalar::rational(num(rng), den(rng));
  switch (shape(rng)) {
    case 1: s = s * kPi; break;
    case 2: s = s + Scalar::rational(num(rng), den(rng)) * kI; break;
    case 3: s = s / (kPi + Scalar::rational(num(rng), den(rng))); break;
    default: break;
  }
  return s;
}

Form phi(int n, std::initializer_list<int> word) {
  // 1-based indices; negative means barred.
  std::vector<int> w;
  for (int k : word) w.push_back(k > 0 ? k - 1 : n + (-k) - 1);
  auto [s, m] = sort_word(w);
  return Form::monomial(n, m, Scalar(s));
}

GramData standard_gram(int n) {
  ScalarMatrix h(n, n);
  for (int k = 0; k < n; ++k) h(k, k) = Scalar(2);
  return GramData(h, 1);
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("scalar literals") {
    CHECK(Scalar(2).inverse() == Scalar::rational(1, 2));
    CHECK(Scalar(4) * kPi * Scalar::rational(1, 2) == Scalar(2) * kPi);
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    for (long lambda = -50; lambda <= 50; ++lambda) {
      CHECK_FALSE((Scalar(-4 * lambda) * kPi + Scalar(1)).is_zero());
      CHECK_FALSE((Scalar(-4 * lambda) * kPi - Scalar(1)).is_zero());
    }
  }

  TEST_CASE("scalar field axioms on random elements") {
    std::mt19937 rng(20240517);
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("canonical form makes equality syntactic") {
    Scalar x = (kPi * kPi - Scalar(1)) / (kPi - Scalar(1));
    CHECK(x == kPi + Scalar(1));
    CHECK(x.re().is_polynomial());
    Scalar y = Scalar(3) / (Scalar(2) * kPi + Scalar(4));
    CHECK(y.re().den().leading() == 1);
  }

  TEST_CASE("certified signs") {
    CHECK(sign_at_pi(RationalFunction(QPoly::tau()) - RationalFunction(mpq_class(355, 113))) == -1);
    CHECK(sign_at_pi(RationalFunction(QPoly::tau()) - RationalFunction(mpq_class(333, 106))) == 1);
    CHECK(real_sign(Scalar(-1) / kPi) == -1);
    CHECK(real_sign(Scalar()) == 0);
    CHECK_THROWS_AS(real_sign(kI), ValidationError);
    auto enc = pi_enclosure(200);
    CHECK(enc.lo < enc.hi);
    CHECK(enc.lo > mpq_class(314159, 100000));
    CHECK(enc.hi < mpq_class(314160, 100000));
  }

  TEST_CASE("wedge examples") {
    const int n = 3;
    CHECK(wedge(phi(n, {1}), phi(n, {1})).is_zero());
    CHECK(wedge(phi(n, {1}), phi(n, {-2})) == phi(n, {1, -2}));
    CHECK(wedge(phi(n, {-2}), phi(n, {1})) == -phi(n, {1, -2}));
    CHECK_THROWS_AS(wedge(Form::generator(2, 0), Form::generator(3, 0)), DimensionMismatch);
  }

  TEST_CASE("wedge is associative and graded commutative on random monomials") {
    const int n = 3;
    std::mt19937 rng(7);
    std::uniform_int_distribution<Mask> mdist(0, 63);
    for (int trial = 0; trial < 300; ++trial) {
      Form a = Form::monomial(n, mdist(rng), random_scalar(rng));
      Form b = Form::monomial(n, mdist(rng), random_scalar(rng));
      Form c = Form::monomial(n, mdist(rng), random_scalar(rng));
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
      int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
      CHECK(wedge(a, b) == Scalar(sign) * wedge(b, a));
    }
  }

  TEST_CASE("bidegree split") {
    const int n = 3;
    Form f = phi(n, {1, -2}) + phi(n, {-1, -2});
    auto parts = f.bidegree_split();
    REQUIRE(parts.size() == 2);
    CHECK(parts.at({1, 1}) == phi(n, {1, -2}));
    CHECK(parts.at({0, 2}) == phi(n, {-1, -2}));
    CHECK(Form(n).bidegree_split().empty());

    std::mt19937 rng(11);
    std::uniform_int_distribution<Mask> mdist(0, 63);
    for (int trial = 0; trial < 100; ++trial) {
      Form g(n);
      for (int k = 0; k < 6; ++k) g.add(mdist(rng), random_scalar(rng));
      Form sum(n);
      for (const auto& [pq, part] : g.bidegree_split()) {
        for (const auto& [m, c] : part.terms()) CHECK(bidegree(m, n) == pq);
        sum += part;
      }
      CHECK(sum == g);
    }
  }

  TEST_CASE("conjugation") {
    const int n = 3;
    CHECK(phi(n, {1, 2}).conj() == phi(n, {-1, -2}));
    CHECK(phi(n, {1, -1}).conj() == -phi(n, {1, -1}));
    Form f = kI * phi(n, {1, -3});
    CHECK(f.conj().conj() == f);
  }

  TEST_CASE("hodge star for the standard metric") {
    const int n = 3;
    GramData g = standard_gram(n);
    Scalar half_i = kI * Scalar::rational(1, 2);
    CHECK(g.star(phi(n, {1, 2})) == half_i * phi(n, {1, 2, 3, -3}));
    CHECK(g.star(phi(n, {1, 3})) == -half_i * phi(n, {1, 2, 3, -2}));
    CHECK(g.star(Form::constant(n, Scalar(1))) == g.volume());
    CHECK(g.star(g.volume()) == Form::constant(n, Scalar(1)));
  }

  TEST_CASE("star star and the defining identity on all monomials") {
    const int n = 3;
    ScalarMatrix h(n, n);
    h(0, 0) = Scalar(2);
    h(1, 1) = Scalar(3);
    h(2, 2) = Scalar(5) / kPi;
    h(0, 1) = kI;
    h(1, 0) = -kI;
    GramData g(h, -1);
    FormBasis basis(n);
    for (Mask m : basis.masks()) {
      Form a = Form::monomial(n, m);
      int k = popcount(m);
      CHECK(g.star(g.star(a)) == Scalar(k % 2 ? -1 : 1) * a);
      for (Mask m2 : basis.masks()) {
        if (popcount(m2) != k) continue;
        Form b = Form::monomial(n, m2);
        CHECK(wedge(a, g.star(b.conj())) == g.inner(a, b) * g.volume());
      }
      CHECK(real_sign(g.inner(a, a)) == 1);
    }
  }

  TEST_CASE("inner product examples") {
    GramData g = standard_gram(3);
    CHECK(g.inner(Form::generator(3, 0), Form::generator(3, 0)) == Scalar(2));
    CHECK(g.inner(Form::generator(3, 0), Form::generator(3, 1)).is_zero());
    CHECK_THROWS_AS(g.inner(Form::generator(3, 0), Form::monomial(3, 3)), DegreeMismatch);
    ScalarMatrix bad(1, 1);
    bad(0, 0) = Scalar(-1);
    CHECK_THROWS_AS(GramData(bad, 1), NotPositive);
  }

  TEST_CASE("exact linear algebra") {
    Matrix<mpq_class> m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 7;
    CHECK(rank(m) == 2);
    auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == 1);
    CHECK(ker[0][1] == mpq_class(-1, 2));
    CHECK(ker[0][2] == 0);

    ScalarMatrix s(2, 2);
    s(0, 0) = kPi; s(0, 1) = kI;
    s(1, 0) = Scalar(1); s(1, 1) = Scalar(2);
    CHECK(determinant(s) == Scalar(2) * kPi - kI);
    CHECK(inverse(s) * s == ScalarMatrix::identity(2));
    ScalarMatrix z(2, 2);
    CHECK_THROWS_AS(inverse(z), DivisionByZero);
  }

  TEST_CASE("monomial enumeration") {
    CHECK(monomials(3, 1, 0).size() == 3);
    CHECK(monomials(3, 2, 1).size() == 9);
    FormBasis b(3);
    CHECK(b.size() == 64);
    CHECK(monomial_ascii(phi(3, {1, -2}).terms().begin()->first, 3, Notation::Phi) == "phi12b");
  }
}
