#include <doctest.h>

#include "fixtures.hpp"
#include "solidity.hpp"

using namespace axial;
using fixtures::q;

namespace {

std::vector<Scalar> samples() { return {q("1"), q("2"), q("3"), q("-1"), q("5/7")}; }

}  // namespace

TEST_CASE("pair classification") {
  auto flat = universal2Gen(q("1/2"), q("0"), fixtures::Q());
  CHECK(classifyPair(flat.a, flat.b, *flat.form, q("1/2")).kind == PairKind::Flat);
  auto toricPair = universal2Gen(q("1/2"), q("1/2"), fixtures::Q());
  PairClass c = classifyPair(toricPair.a, toricPair.b, *toricPair.form, q("1/2"));
  CHECK(c.kind == PairKind::Toric);
  CHECK(c.pi == q("1/2"));
  auto baric = universal2Gen(q("1/2"), q("1"), fixtures::Q());
  CHECK(classifyPair(baric.a, baric.b, *baric.form, q("1/2")).kind == PairKind::Baric);
  CHECK(classifyPair(flat.a, flat.a, *flat.form, q("1/2")).kind == PairKind::Equal);
  auto orth = matsuoFromTripleSystem(TripleSystem::parse("", {"p", "r"}), q("1/2"), fixtures::Q());
  CHECK(classifyPair(orth.axes[0], orth.axes[1], *orth.form, q("1/2")).kind == PairKind::Orthogonal);
  auto m = fixtures::matsuo3C();
  PairClass mc = classifyPair(m.axes[0], m.axes[1], *m.form, q("1/2"));
  CHECK(mc.quarterSpecial);
  // symmetric in a and b
  PairClass swapped = classifyPair(toricPair.b, toricPair.a, *toricPair.form, q("1/2"));
  CHECK(swapped.kind == c.kind);
  CHECK(swapped.pi == c.pi);
}

TEST_CASE("classifyPair refuses non-axes") {
  auto m = fixtures::matsuo3C();
  try {
    classifyPair(m.axes[0] + m.axes[1], m.axes[2], *m.form, q("1/2"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAxes);
  }
}

TEST_CASE("toric enumeration contains 0, the unit and the eps family") {
  auto t = toricEUF(fixtures::Q());
  Subalgebra B = generateSubalgebra({t.family(q("1")), t.family(q("2"))});
  IdempotentSet s = enumerateIdempotents2Gen(B, q("1/2"));
  bool zero = false, unit = false;
  for (const auto& p : s.points) {
    CHECK(isIdempotent(p.x));
    zero = zero || p.x.isZero();
    unit = unit || p.x == t.u;
  }
  CHECK(zero);
  CHECK(unit);
  REQUIRE(s.families.size() == 1);
  const IdempotentFamily& fam = s.families[0];
  CHECK(fam.parameter == "eps");
  REQUIRE(fam.excluded.size() == 1);
  CHECK(fam.excluded[0].isZero());
  CHECK(isIdempotent(fam.generic(t.algebra)));
  for (const auto& e : samples()) CHECK(isIdempotent(fam.at(t.algebra, e)));
  CHECK_THROWS_AS(fam.at(t.algebra, q("0")), Error);
}

TEST_CASE("enumeration of small subalgebras") {
  auto m = fixtures::matsuo3C();
  IdempotentSet one = enumerateIdempotents2Gen(generateSubalgebra({m.axes[0]}), q("1/2"));
  CHECK(one.points.size() == 2);
  CHECK(one.families.empty());
  auto orth = matsuoFromTripleSystem(TripleSystem::parse("", {"p", "r"}), q("1/2"), fixtures::Q());
  IdempotentSet two = enumerateIdempotents2Gen(generateSubalgebra({orth.axes[0], orth.axes[1]}), q("1/2"));
  CHECK(two.points.size() == 4);  // 0, p, r, p + r
  for (const auto& p : two.points) CHECK(isIdempotent(p.x));
}

TEST_CASE("subalgebras beyond dimension 3 are unsupported") {
  auto h = fixtures::h3();
  Subalgebra B = generateSubalgebra({h.axes[0], fixtures::h3Pair(h), h.axes[2]});
  REQUIRE(B.dim() > 3);
  try {
    enumerateIdempotents2Gen(B, q("1/2"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedShape);
  }
}

TEST_CASE("toric audit over samples and symbolically is solid") {
  auto t = toricEUF(fixtures::Q());
  SolidityReport r = solidAudit(t.family(q("1")), t.family(q("2")), t.form, q("1/2"), samples());
  CHECK(r.pairClass.kind == PairKind::Toric);
  CHECK(r.solid);
  CHECK(r.allPrimitiveAxes);
  CHECK(r.allJordanType);
  bool symbolic = false;
  for (const auto& i : r.idempotents) symbolic = symbolic || i.symbolic;
  CHECK(symbolic);
}

TEST_CASE("flat, baric and 3C(1/2) pairs: audits are computed") {
  for (const char* pi : {"0", "1", "1/2", "1/3"}) {
    auto u = universal2Gen(q("1/2"), q(pi), fixtures::Q());
    SolidityReport r = solidAudit(u.a, u.b, *u.form, q("1/2"), samples());
    CHECK_MESSAGE(r.solid, pi);
  }
  auto m = fixtures::matsuo3C();
  SolidityReport r = solidAudit(m.axes[0], m.axes[1], *m.form, q("1/2"), samples());
  CHECK(r.pairClass.quarterSpecial);
  CHECK(r.solid == (r.allPrimitiveAxes && r.allJordanType));
}

TEST_CASE("every enumerated idempotent of the 2-generated family is idempotent over F_7") {
  FieldDesc f7 = FieldDesc::primeField(7);
  auto u = universal2Gen(parseScalar("1/2", f7), parseScalar("3", f7), f7);
  IdempotentSet s = enumerateIdempotents2Gen(generateSubalgebra({u.a, u.b}), parseScalar("1/2", f7));
  for (const auto& p : s.points) CHECK(isIdempotent(p.x));
  for (const auto& fam : s.families)
    for (long t = 1; t < 7; ++t) {
      Scalar x = Scalar::fromInt(f7, t);
      if (!fam.denominator.eval(x).isZero()) CHECK(isIdempotent(fam.at(u.algebra, x)));
    }
}

TEST_CASE("hardness probe") {
  auto t = toricEUF(fixtures::Q());
  Subalgebra B = generateSubalgebra({t.family(q("1")), t.family(q("2"))});
  std::vector<Element> xs = {t.family(q("1")), t.family(q("2")), t.family(q("3"))};
  HardnessProbe h = hardnessProbe(B, xs, xs);
  CHECK(h.idempotentRank == 3);
  CHECK(h.isHard);
  HardnessProbe single = hardnessProbe(B, {xs[0]}, {xs[0]});
  CHECK(single.isHard);
  HardnessProbe zero = hardnessProbe(B, {Element::zero(t.algebra)}, {xs[0]});
  CHECK_FALSE(zero.isHard);
}
