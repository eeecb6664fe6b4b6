#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace axial;
using fixtures::q;

TEST_CASE("products agree with the naive structure-constant oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& t : fixtures::all()) {
    auto tab = oracle::tableOf(*t.alg);
    for (int s = 0; s < 20; ++s) {
      Vec x, y;
      for (std::size_t i = 0; i < t.alg->dim(); ++i) {
        x.push_back(Scalar::fromInt(fixtures::Q(), d(rng)));
        y.push_back(Scalar::fromInt(fixtures::Q(), d(rng)));
      }
      CHECK(oracle::toQ(t.alg->multiply(x, y)) == oracle::mul(tab, oracle::toQ(x), oracle::toQ(y)));
    }
  }
}

TEST_CASE("makeAlgebra validates shape and symmetry") {
  const FieldDesc& Q = fixtures::Q();
  std::vector<std::vector<Vec>> asym = {{{q("1"), q("0")}, {q("0"), q("1")}}, {{q("1"), q("0")}, {q("0"), q("1")}}};
  try {
    makeAlgebra(Q, {"a", "b"}, asym);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AsymmetricStructure);
  }
  std::vector<std::vector<Vec>> shortRow = {{{q("1")}}};
  CHECK_THROWS_AS(makeAlgebra(Q, {"a", "b"}, shortRow), Error);
}

TEST_CASE("elements of different algebras do not mix") {
  auto a = fixtures::matsuo3C();
  auto b = fixtures::toric();
  CHECK_THROWS_AS((void)(a.axes[0] + b.axes[0]), Error);
}

TEST_CASE("formatting reads like a linear combination") {
  auto t = fixtures::matsuo3C();
  Element x = t.axes[0].scaled(q("1/4")) - t.axes[1].scaled(q("1/2"));
  CHECK(x.str() == "1/4*a - 1/2*b");
  CHECK(Element::zero(t.alg).str() == "0");
}

TEST_CASE("subalgebra generated by two toric axes is everything") {
  auto t = fixtures::toric();
  Subalgebra B = generateSubalgebra({t.axes[0], t.axes[1]});
  CHECK(B.dim() == 3);
  CHECK(B.witness[0] == "g1");
  CHECK(B.witness[2] == "(g1*g2)");
  // induced table reproduces the parent products
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(B.embed(B.induced->product(i, k)) == B.basis[i] * B.basis[k]);
}

TEST_CASE("orthogonal axes generate a 2-dimensional subalgebra") {
  auto m = matsuoFromTripleSystem(TripleSystem::parse("", {"p", "r"}), q("1/2"), fixtures::Q());
  Subalgebra B = generateSubalgebra({m.axes[0], m.axes[1]});
  CHECK(B.dim() == 2);
  CHECK((m.axes[0] * m.axes[1]).isZero());
}

TEST_CASE("changeField embeds the table") {
  auto t = fixtures::toric();
  AlgebraPtr big = changeField(*t.alg, FieldDesc::rationalFunctions("eps"));
  CHECK(big->dim() == 3);
  CHECK(big->product(0, 2)[1] == embed(q("1/8"), big->field()));
}
