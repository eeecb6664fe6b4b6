#include <doctest.h>

#include "axes.hpp"
#include "fixtures.hpp"
#include "frobenius.hpp"
#include "oracles.hpp"

using namespace axial;
using fixtures::q;

TEST_CASE("3C(1/2) normal form: off-diagonal 1/4, determinant 27/32, trivial radical") {
  auto t = fixtures::matsuo3C();
  REQUIRE(t.form);
  const Matrix& g = t.form->gram();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) CHECK(g.at(i, k) == (i == k ? q("1") : q("1/4")));
  CHECK(t.form->determinant() == q("27/32"));
  CHECK(oracle::cofactorDet(oracle::toQ(g)) == oracle::Q(27, 32));
  CHECK(radical(*t.form).empty());
}

TEST_CASE("toric form: determinant -1/8 by cofactors, radical 0") {
  auto t = fixtures::toric();
  CHECK(t.form->determinant() == q("-1/8"));
  CHECK(oracle::cofactorDet(oracle::toQ(t.form->gram())) == oracle::Q(-1, 8));
  CHECK(radical(*t.form).empty());
}

TEST_CASE("solved forms are associative under the naive oracle") {
  for (const auto& t : fixtures::all()) {
    REQUIRE(t.form);
    auto tab = oracle::tableOf(*t.alg, &t.form->gram());
    const std::size_t n = t.alg->dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          auto bi = oracle::unitVec(n, i), bj = oracle::unitVec(n, j), bk = oracle::unitVec(n, k);
          CHECK(oracle::form(tab, oracle::mul(tab, bi, bj), bk) == oracle::form(tab, bi, oracle::mul(tab, bj, bk)));
        }
  }
}

TEST_CASE("Matsuo form takes lambda/2 on collinear pairs and 0 otherwise") {
  auto m = fixtures::matsuoS4();
  REQUIRE(m.form);
  // t12 and t13 are collinear; t12 and t34 are not.
  CHECK((*m.form)(m.axes[0], m.axes[1]) == q("1/4"));
  Element t34 = m.axes.back();
  CHECK((*m.form)(m.axes[0], t34) == q("0"));
  CHECK((m.axes[0] * t34).isZero());
}

TEST_CASE("eigenspaces of distinct eigenvalues are orthogonal and y1 = (a,y) a") {
  for (const auto& t : fixtures::all()) {
    for (const auto& a : t.axes) {
      EigenData d = eigenDecompose(a, {q("0"), q("1"), t.lambda});
      REQUIRE(d.complete);
      for (std::size_t s1 = 0; s1 < d.spaces.size(); ++s1)
        for (std::size_t s2 = s1 + 1; s2 < d.spaces.size(); ++s2)
          for (const auto& u : d.spaces[s1].basis)
            for (const auto& v : d.spaces[s2].basis) CHECK((*t.form)(u, v).isZero());
      if (!checkAxis(a, t.lambda).primitive) continue;
      CHECK((*t.form)(a, a).isOne());
      for (std::size_t i = 0; i < t.alg->dim(); ++i) {
        Element y = Element::basis(t.alg, i);
        CHECK(componentRecovery(a, y, {t.lambda}).y1 == a.scaled((*t.form)(a, y)));
      }
    }
  }
}

TEST_CASE("inconsistent constraints raise Inconsistent") {
  auto t = fixtures::matsuo3C();
  std::vector<FormConstraint> cs = {{t.axes[0], t.axes[0], q("1")}, {t.axes[0], t.axes[1], q("1/3")}};
  try {
    solveFrobenius(t.alg, cs);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inconsistent);
  }
}

TEST_CASE("without normalization the form space has one parameter per orbit class") {
  auto t = fixtures::matsuo3C();
  FormSolution s = solveFrobenius(t.alg, {});
  CHECK_FALSE(s.unique());
  CHECK(s.homogeneousBasis.size() == 1);
}

TEST_CASE("non-associative Gram matrices are rejected") {
  auto t = fixtures::matsuo3C();
  CHECK_THROWS_AS(BilinearForm(t.alg, Matrix::identity(fixtures::Q(), 3)), Error);
}

TEST_CASE("toric trace audit: e is 4-nilpotent and there are no violations") {
  auto t = toricEUF(fixtures::Q());
  CHECK(is4Nilpotent(t.e));
  CHECK(is4Nilpotent(t.f));
  CHECK_FALSE(is4Nilpotent(t.u));
  CHECK(traceAdmissibilityAudit(t.form).empty());
}

TEST_CASE("a synthetic trace violation is detected") {
  // n^2 = 0 with (n, n) = 1 is associative, and n*n = 0 is 4-nilpotent.
  const FieldDesc& Q = fixtures::Q();
  AlgebraPtr alg = makeAlgebra(Q, {"n"}, {{{q("0")}}});
  BilinearForm form(alg, Matrix::identity(Q, 1));
  auto v = traceAdmissibilityAudit(form);
  REQUIRE(v.size() == 1);
  CHECK(v[0].value.isOne());
}

TEST_CASE("axial radical of 3C(1/2) is trivial") {
  auto t = fixtures::matsuo3C();
  CHECK(axialRadical(t.alg, t.axes, t.lambda).empty());
  CHECK(axialRadical(t.alg, {}, t.lambda).size() == 3);
}
