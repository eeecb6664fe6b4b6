#include <doctest.h>

#include "axes.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace axial;
using fixtures::q;

TEST_CASE("3C(1/2) axes are primitive of Jordan type with automorphic Miyamoto maps") {
  auto t = fixtures::matsuo3C();
  for (const auto& a : t.axes) {
    AxisReport r = checkAxis(a, t.lambda);
    CHECK(r.isIdempotent);
    CHECK(r.isAxis);
    CHECK(r.primitive);
    CHECK(r.ax1Holds);
    CHECK(r.fusion.jordanType());
    CHECK(r.miyamotoIsAutomorphism);
    CHECK(r.dim0 == 1);
    CHECK(r.dimLambda == 1);
  }
}

TEST_CASE("lambda 0 and 1 are rejected") {
  auto t = fixtures::matsuo3C();
  for (const char* bad : {"0", "1"}) {
    try {
      checkAxis(t.axes[0], q(bad));
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadLambda);
    }
  }
}

TEST_CASE("non-idempotents and non-primitive idempotents are reported, not thrown") {
  auto t = fixtures::matsuo3C();
  AxisReport r = checkAxis(t.axes[0] + t.axes[1], t.lambda);
  CHECK_FALSE(r.isIdempotent);
  CHECK_FALSE(r.isAxis);
  auto h = fixtures::h3();
  Element e12 = h.axes[0] + h.axes[1];  // E11 + E22: idempotent, A1 is 3-dimensional
  AxisReport r2 = checkAxis(e12, q("1/2"));
  CHECK(r2.isAxis);
  CHECK_FALSE(r2.primitive);
  CHECK(r2.dim1 == 3);
}

TEST_CASE("inferLambda reads the third eigenvalue") {
  CHECK(inferLambda(fixtures::matsuo3C("1/3").axes[0]) == q("1/3"));
  CHECK(inferLambda(fixtures::toric().axes[0]) == q("1/2"));
}

TEST_CASE("toric family member eps = 2 has A_1/2 spanned by 2e - f/2") {
  auto t = toricEUF(fixtures::Q());
  EigenData d = eigenDecompose(t.family(q("2")), {q("0"), q("1"), q("1/2")});
  auto half = d.space(q("1/2"));
  REQUIRE(half.size() == 1);
  Span s(fixtures::Q(), 3, {half[0].coords()});
  CHECK(s.contains((t.e.scaled(q("2")) - t.f.scaled(q("1/2"))).coords()));
}

TEST_CASE("closed-form components equal eigenprojections on every test algebra") {
  for (const auto& t : fixtures::all()) {
    for (const auto& a : t.axes) {
      if (!checkAxis(a, t.lambda).primitiveJordan()) continue;
      EigenData d = eigenDecompose(a, {q("0"), q("1"), t.lambda});
      for (std::size_t i = 0; i < t.alg->dim(); ++i) {
        Element y = Element::basis(t.alg, i);
        Components c = componentRecovery(a, y, {t.lambda});
        Components p = eigenprojection(d, y, {t.lambda});
        CHECK(c.y1 == p.y1);
        CHECK(c.y0 == p.y0);
        CHECK(c.at(t.lambda) == p.at(t.lambda));
        CHECK(c.y1 + c.y0 + c.at(t.lambda) == y);
      }
    }
  }
}

TEST_CASE("3C(1/2) component values for y = b") {
  auto t = fixtures::matsuo3C();
  Components c = componentRecovery(t.axes[0], t.axes[1], {t.lambda});
  CHECK(c.y1.str() == "1/4*a");
  CHECK(c.y0.str() == "-1/4*a + 1/2*b + 1/2*c");
  CHECK(c.at(t.lambda).str() == "1/2*b - 1/2*c");
}

TEST_CASE("component recovery rejects non-axes") {
  auto t = fixtures::matsuo3C();
  CHECK_THROWS_AS(componentRecovery(t.axes[0] + t.axes[1], t.axes[2], {t.lambda}), Error);
}

TEST_CASE("Miyamoto map of a swaps b and c") {
  auto t = fixtures::matsuo3C();
  MiyamotoMap m = miyamoto(t.axes[0], t.lambda);
  CHECK(m.involution);
  CHECK(m.isAutomorphism);
  CHECK(m.apply(t.axes[1]) == t.axes[2]);
  CHECK(m.apply(t.axes[2]) == t.axes[1]);
  CHECK(m.apply(t.axes[0]) == t.axes[0]);
  // independent check: T = I - 2 (L^2 - L)/(lambda(lambda - 1))
  auto tab = oracle::tableOf(*t.alg);
  auto a = oracle::toQ(t.axes[0].coords());
  for (std::size_t i = 0; i < 3; ++i) {
    auto y = oracle::unitVec(3, i);
    auto ay = oracle::mul(tab, a, y);
    auto aay = oracle::mul(tab, a, ay);
    oracle::Q lam(1, 2);
    auto ty = oracle::add(y, oracle::add(aay, ay, -1), -2 / (lam * (lam - 1)));
    CHECK(oracle::toQ(m.apply(Element::basis(t.alg, i)).coords()) == ty);
  }
}

TEST_CASE("orbits: 3C closes on its three axes, a toric pair does not close") {
  auto t = fixtures::matsuo3C();
  CHECK(axisOrbit({t.axes[0], t.axes[1]}, t.lambda, 10).size() == 3);
  auto tor = fixtures::toric();
  try {
    axisOrbit({tor.axes[0], tor.axes[1]}, tor.lambda, 50);
    FAIL("no overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrbitOverflow);
  }
  // the pi = 1/2 pair of the 2-generated algebra has a finite orbit
  auto u = fixtures::twoGen("1/2");
  CHECK(axisOrbit(u.axes, u.lambda, 50).size() == 4);
}

TEST_CASE("Seress property holds on 3C(1/2), toric and H3") {
  for (const auto& t : {fixtures::matsuo3C(), fixtures::toric(), fixtures::h3()})
    for (const auto& a : t.axes) CHECK(seressCheck(a, t.lambda).holds);
}

TEST_CASE("axes over a prime field") {
  auto m = matsuoFromTripleSystem(TripleSystem::parse("a,b,c"), parseScalar("1/2", FieldDesc::primeField(7)),
                                  FieldDesc::primeField(7));
  AxisReport r = checkAxis(m.axes[0], parseScalar("1/2", FieldDesc::primeField(7)));
  CHECK(r.primitiveJordan());
}
