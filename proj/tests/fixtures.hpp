#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"

namespace fixtures {

using namespace axial;

inline const FieldDesc& Q() {
  static const FieldDesc q = FieldDesc::rationals();
  return q;
}

inline Scalar q(const char* text) { return parseScalar(text, Q()); }

// An algebra with a normal form and certified axes of one type.
struct TestAlgebra {
  std::string name;
  AlgebraPtr alg;
  std::optional<BilinearForm> form;
  std::vector<Element> axes;
  Scalar lambda;
};

inline TestAlgebra matsuo3C(const char* lambda = "1/2") {
  auto m = matsuoFromTripleSystem(TripleSystem::parse("a,b,c"), q(lambda), Q());
  return {std::string("3C(") + lambda + ")", m.algebra, m.form, m.axes, q(lambda)};
}

// Transpositions of S4; lines are the S3 subgroups.
inline TestAlgebra matsuoS4() {
  auto m = matsuoFromTripleSystem(
      TripleSystem::parse("t12,t13,t23;t12,t14,t24;t13,t14,t34;t23,t24,t34"), q("1/2"), Q());
  return {"Matsuo(S4, 1/2)", m.algebra, m.form, m.axes, q("1/2")};
}

inline TestAlgebra toric() {
  auto t = toricEUF(Q());
  return {"toric", t.algebra, t.form, {t.family(q("1")), t.family(q("2")), t.family(q("3"))}, q("1/2")};
}

inline TestAlgebra twoGen(const char* pi) {
  auto u = universal2Gen(q("1/2"), q(pi), Q());
  return {std::string("2gen(1/2, ") + pi + ")", u.algebra, u.form, {u.a, u.b}, q("1/2")};
}

inline TestAlgebra h3() {
  auto j = jordanSymmetricMatrices(3, Q());
  std::vector<Element> axes;
  for (std::size_t i = 0; i < 3; ++i) axes.push_back(Element::basis(j.algebra, j.index(i, i)));
  return {"H3(Q)", j.algebra, j.traceForm, axes, q("1/2")};
}

// b = (E11 + E22 + E12 + E21)/2 in H3(Q); with a = E11, (a, b) = 1/2.
inline Element h3Pair(const TestAlgebra& h) {
  Vec v = h.alg->zero();
  v[0] = q("1/2");  // E11
  v[1] = q("1/2");  // E12 + E21
  v[3] = q("1/2");  // E22
  return Element(h.alg, v);
}

inline std::vector<TestAlgebra> all() {
  return {matsuo3C("1/2"), matsuo3C("1/3"), toric(), twoGen("1/8"), twoGen("1/3"), h3(), matsuoS4()};
}

}  // namespace fixtures
