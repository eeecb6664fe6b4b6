#include <doctest.h>

#include "axes.hpp"
#include "fixtures.hpp"
#include "identities.hpp"
#include "oracles.hpp"

using namespace axial;
using fixtures::q;

namespace {

IdentityVerdict verdict(const CatalogEntry& e, const fixtures::TestAlgebra& t) {
  IdentityOptions o;
  o.form = t.form ? &*t.form : nullptr;
  o.distinctSlots = e.distinctSlots;
  return holdsAsIdentity(builtinIdentity(e.name, t.lambda), t.alg, t.axes, o);
}

// Polarization oracle: sum over subsets S of {1..4} of (-1)^(4-|S|) f(sum_S x_i).
oracle::QVec polarize(const GenPoly& f, const oracle::Table& tab, const std::vector<oracle::QVec>& xs) {
  oracle::QVec out(tab.n, 0);
  for (unsigned mask = 1; mask < 16; ++mask) {
    oracle::QVec s(tab.n, 0);
    int size = 0;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) {
        s = oracle::add(s, xs[i]);
        ++size;
      }
    oracle::QVec v = oracle::evalPoly(f, tab, {{1, s}}, {}, 0);
    out = oracle::add(out, v, (4 - size) % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace

TEST_CASE("parser: canonical commutative terms and printing round trip") {
  GenPoly a = parsePoly("x1*x2 - x2*x1");
  CHECK(a.isZero());
  GenPoly b = parsePoly("(x1*x1)*x2 + x2*(x1*x1)");
  CHECK(b.size() == 1);
  for (const auto& e : identityCatalog()) {
    GenPoly f = builtinIdentity(e.name);
    CHECK_MESSAGE(parsePoly(f.str()) == f, e.name);
  }
}

TEST_CASE("parser errors carry positions") {
  for (const char* bad : {"x1*x2*x3", "x1 +", "B(x1)", "x1/x2", "(x1*x2"}) {
    try {
      parsePoly(bad);
      FAIL(bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }
}

TEST_CASE("linearization of x^2 is 2 x1 x2") {
  GenPoly f = parsePoly("x1*x1");
  GenPoly l = linearizeStep(f, 1, 2);
  CHECK(l == parsePoly("2*(x1*x2)"));
  CHECK_THROWS_AS(linearizeStep(f, 1, 1), Error);
}

TEST_CASE("full linearization of 4-power associativity is 2h") {
  GenPoly lin = fullyLinearize(builtinIdentity("fourPowerAssoc"));
  GenPoly h = builtinIdentity("linearizedPA");
  CHECK(lin == h.scaled(Scalar::fromInt(GenPoly::coefficientField(), 2)));
}

TEST_CASE("polarization oracle fixes c = 2 in a non power-associative algebra") {
  auto t = fixtures::matsuo3C("1/3");
  auto tab = oracle::tableOf(*t.alg);
  GenPoly f = builtinIdentity("fourPowerAssoc");
  GenPoly h = builtinIdentity("linearizedPA");
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(-2, 2);
  bool sawNonzero = false;
  for (int s = 0; s < 10; ++s) {
    std::vector<oracle::QVec> xs(4, oracle::QVec(tab.n));
    for (auto& x : xs)
      for (auto& c : x) c = d(rng);
    oracle::QVec pol = polarize(f, tab, xs);
    oracle::QVec hv = oracle::evalPoly(h, tab, {{1, xs[0]}, {2, xs[1]}, {3, xs[2]}, {4, xs[3]}}, {}, 0);
    sawNonzero = sawNonzero || !oracle::isZero(hv);
    CHECK(pol == oracle::add(oracle::QVec(tab.n, 0), hv, 2));
  }
  CHECK(sawNonzero);
}

TEST_CASE("partial linearization entry is one linearization step") {
  GenPoly f = builtinIdentity("fourPowerAssoc");
  GenPoly step = linearizeStep(f, 1, 2);
  auto comps = multihomogeneousComponents(step);
  bool found = false;
  for (const auto& c : comps)
    if (c == builtinIdentity("linearizedPA-partial") || c == builtinIdentity("linearizedPA-partial").scaled(
                                                              Scalar::fromInt(GenPoly::coefficientField(), -1)))
      found = true;
  CHECK(found);
}

TEST_CASE("ax1 and semisimpleSpectrum normalize to the same polynomial") {
  CHECK(builtinIdentity("ax1") == builtinIdentity("semisimpleSpectrum"));
}

TEST_CASE("the printed axis relation a(a(ay)) = (lam+1)(a(ay) - lam ay) fails on 3C") {
  auto t = fixtures::matsuo3C();
  GenPoly printed = parsePoly("E1*(E1*(E1*x1)) - (lam+1)*(E1*(E1*x1)) + (lam+1)*lam*(E1*x1)");
  printed.bindLambda(t.lambda);
  CHECK_FALSE(holdsAsIdentity(printed, t.alg, t.axes).holds);
  GenPoly fixed = builtinIdentity("ax1", t.lambda);
  CHECK(holdsAsIdentity(fixed, t.alg, t.axes).holds);
}

TEST_CASE("lam*y + (a,y)a - ay is not in A_0 while the corrected element is") {
  auto t = fixtures::matsuo3C();
  GenPoly printed = parsePoly("E1*(lam*x1 + B(E1,x1)*E1 - E1*x1)");
  GenPoly fixed = parsePoly("E1*(lam*x1 + (1-lam)*B(E1,x1)*E1 - E1*x1)");
  IdentityOptions o;
  o.form = &*t.form;
  o.lambda = t.lambda;
  CHECK_FALSE(holdsAsIdentity(printed, t.alg, t.axes, o).holds);
  CHECK(holdsAsIdentity(fixed, t.alg, t.axes, o).holds);
}

TEST_CASE("Jordan identity holds on 2-generated algebras and toric") {
  for (const char* pi : {"0", "1/8", "1/3", "2"}) {
    auto t = fixtures::twoGen(pi);
    CHECK_MESSAGE(holdsAsIdentity(builtinIdentity("jordan"), t.alg, {}).holds, pi);
  }
  CHECK(holdsAsIdentity(builtinIdentity("jordan"), fixtures::toric().alg, {}).holds);
}

TEST_CASE("Jordan identity holds on Matsuo(S4, 1/2)") {
  CHECK(holdsAsIdentity(builtinIdentity("jordan"), fixtures::matsuoS4().alg, {}).holds);
}

TEST_CASE("Jordan identity fails on 3C(1/3) with an exhibited witness") {
  auto t = fixtures::matsuo3C("1/3");
  IdentityVerdict v = holdsAsIdentity(builtinIdentity("jordan"), t.alg, {});
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness);
  Element val = evaluate(v.witness->evaluated, t.alg, v.witness->x, v.witness->e);
  CHECK(val == v.witness->value);
  CHECK_FALSE(val.isZero());
}

TEST_CASE("non-Matsuo pair in H3 and Matsuo criteria on 3C(1/2)") {
  auto h = fixtures::h3();
  Element a = h.axes[0], b = fixtures::h3Pair(h);
  CHECK(isIdempotent(b));
  CHECK((*h.form)(a, b) == q("1/2"));
  GenPoly mc = builtinIdentity("matsuoCriterion", q("1/2"));
  Element v = evaluate(mc, h.alg, {}, {{1, a}, {2, b}});
  CHECK_FALSE(v.isZero());
  auto t = fixtures::matsuo3C();
  for (const char* name : {"matsuoPairA", "matsuoPairB", "matsuoCriterion"}) {
    IdentityOptions o;
    o.distinctSlots = true;
    CHECK_MESSAGE(holdsAsIdentity(builtinIdentity(name, t.lambda), t.alg, t.axes, o).holds, name);
  }
}

TEST_CASE("Miyamoto closure vanishes for every axis over all basis pairs") {
  for (const auto& t : {fixtures::matsuo3C(), fixtures::toric()}) {
    GenPoly d1 = builtinIdentity("miyamotoClosure", t.lambda);
    EvalOptions o;
    o.form = &*t.form;
    for (const auto& a : t.axes)
      for (std::size_t i = 0; i < t.alg->dim(); ++i)
        for (std::size_t k = 0; k < t.alg->dim(); ++k)
          CHECK(evaluate(d1, t.alg, {{1, Element::basis(t.alg, i)}, {2, Element::basis(t.alg, k)}}, {{1, a}}, o)
                    .isZero());
  }
}

TEST_CASE("identities needing a form raise MissingForm without one") {
  auto t = fixtures::matsuo3C();
  try {
    holdsAsIdentity(builtinIdentity("primitivityFrobenius", t.lambda), t.alg, t.axes);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingForm);
  }
}

TEST_CASE("unbound lam raises UnboundVariable") {
  auto t = fixtures::matsuo3C();
  try {
    holdsAsIdentity(builtinIdentity("ax1"), t.alg, t.axes);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundVariable);
  }
}

TEST_CASE("E-slots require idempotents") {
  auto t = fixtures::matsuo3C();
  try {
    evaluate(builtinIdentity("ax1", t.lambda), t.alg, {{1, t.axes[0]}}, {{1, t.axes[0] + t.axes[1]}});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIdempotent);
  }
}

TEST_CASE("multilinear-basis verdicts agree with 500-sample random substitution") {
  for (const auto& t : fixtures::all()) {
    auto tab = oracle::tableOf(*t.alg, &t.form->gram());
    std::vector<oracle::QVec> pool;
    for (const auto& a : t.axes) pool.push_back(oracle::toQ(a.coords()));
    for (const auto& e : identityCatalog()) {
      IdentityVerdict v = verdict(e, t);
      bool sampled = oracle::randomVerdict(builtinIdentity(e.name, t.lambda), tab, pool, e.distinctSlots,
                                           oracle::toQ(t.lambda));
      CHECK_MESSAGE(v.holds == sampled, t.name << " / " << e.name);
    }
  }
}

TEST_CASE("identities over prime fields") {
  FieldDesc f7 = FieldDesc::primeField(7);
  auto m = matsuoFromTripleSystem(TripleSystem::parse("a,b,c"), parseScalar("1/2", f7), f7);
  IdentityVerdict v = holdsAsIdentity(builtinIdentity("jordan"), m.algebra, {});
  CHECK(v.holds);
  CHECK(v.method == "multilinear-basis");

  // degree 3 in x1 over F_3: linearization is not faithful, enumerate instead
  FieldDesc f3 = FieldDesc::primeField(3, true);
  auto m3 = matsuoFromTripleSystem(TripleSystem::parse("a,b,c"), parseScalar("1/2", f3), f3);
  IdentityVerdict v3 = holdsAsIdentity(builtinIdentity("jordan"), m3.algebra, {});
  CHECK(v3.method == "exhaustive-field");
  CHECK(v3.holds);
}
