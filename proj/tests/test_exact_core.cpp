#include <doctest.h>

#include "matrix.hpp"
#include "oracles.hpp"

using namespace axial;

namespace {

const FieldDesc Qf = FieldDesc::rationals();
Scalar q(const char* s) { return parseScalar(s, Qf); }

Matrix fromText(const FieldDesc& f, const std::vector<std::vector<const char*>>& rows) {
  std::vector<Vec> rs;
  for (const auto& r : rows) {
    Vec v;
    for (const char* x : r) v.push_back(parseScalar(x, f));
    rs.push_back(v);
  }
  return Matrix::fromRows(f, rs, rows.front().size());
}

}  // namespace

TEST_CASE("rationals are canonical and exact") {
  CHECK(q("2/4").str() == "1/2");
  CHECK(q("-6/3").str() == "-2");
  CHECK(q("1/3") + q("1/6") == q("1/2"));
  CHECK((q("3/7") * q("7/3")).isOne());
  CHECK(q("1/2").inverse() == q("2"));
  CHECK_THROWS_AS(q("1") / q("0"), Error);
  CHECK(q("(1/2)^3") == q("1/8"));
}

TEST_CASE("malformed scalars raise Parse with a position") {
  try {
    q("1/");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK_THROWS_AS(q("t"), Error);  // Q has no variable
}

TEST_CASE("prime fields reduce and invert") {
  FieldDesc f7 = FieldDesc::primeField(7);
  CHECK(parseScalar("1/2", f7) == Scalar::fromInt(f7, 4));
  CHECK((Scalar::fromInt(f7, 3) * Scalar::fromInt(f7, 5)).isOne());
  CHECK_THROWS_AS(FieldDesc::primeField(9), Error);
  CHECK_THROWS_AS(FieldDesc::primeField(2), Error);
  CHECK_THROWS_AS(FieldDesc::primeField(5), Error);
  CHECK(FieldDesc::primeField(5, true).prime() == 5);
  CHECK_THROWS_AS(parseScalar("1/7", f7), Error);
}

TEST_CASE("mixing fields raises FieldMismatch") {
  FieldDesc f7 = FieldDesc::primeField(7);
  try {
    (void)(q("1") + Scalar::one(f7));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("rational functions reduce to a canonical quotient") {
  FieldDesc ft = FieldDesc::rationalFunctions("t");
  Scalar a = parseScalar("(t^2-1)/(2*t-2)", ft);
  Scalar b = parseScalar("(t+1)/2", ft);
  CHECK(a == b);
  CHECK(parseScalar("t/t", ft).isOne());
  Scalar t = Scalar::variable(ft);
  CHECK(evaluateAt((t * t + Scalar::one(ft)).function(), q("2")) == q("5"));
  CHECK(parseScalar(b.str(), ft) == b);  // printed form parses back
}

TEST_CASE("determinant agrees with the cofactor oracle") {
  Matrix m = fromText(Qf, {{"1", "1/4", "1/4"}, {"1/4", "1", "1/4"}, {"1/4", "1/4", "1"}});
  CHECK(determinant(m) == q("27/32"));
  CHECK(oracle::cofactorDet(oracle::toQ(m)) == oracle::Q(27, 32));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    Matrix r(Qf, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) r.at(i, k) = Scalar::fromRational(Qf, oracle::Q(d(rng), 1 + (trial % 3)));
    CHECK(oracle::toQ(determinant(r)) == oracle::cofactorDet(oracle::toQ(r)));
  }
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
  Matrix m = fromText(Qf, {{"1", "2", "3", "4"}, {"2", "4", "6", "8"}, {"1", "0", "1", "0"}});
  auto ker = kernel(m);
  CHECK(ker.size() + rank(m) == 4);
  for (const auto& v : ker) {
    Vec out(3, q("0"));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 4; ++k) out[i] += m.at(i, k) * v[k];
    CHECK(isZeroVec(out));
  }
}

TEST_CASE("minimal polynomial of an axis-like matrix") {
  Matrix m = fromText(Qf, {{"1", "0", "0"}, {"0", "1/2", "0"}, {"0", "0", "0"}});
  UniPoly p = minimalPolynomial(m);
  CHECK(p.degree() == 3);
  CHECK(p.eval(q("1/2")).isZero());
  CHECK(evaluate(p, m) == Matrix(Qf, 3, 3));
  Matrix id = Matrix::identity(Qf, 3);
  CHECK(minimalPolynomial(id).degree() == 1);
}

TEST_CASE("roots in the field") {
  UniPoly p(Qf, {q("0"), q("1/2"), q("-3/2"), q("1")});  // x(x-1)(x-1/2)
  auto roots = rootsInField(p);
  CHECK(roots.size() == 3);
  CHECK(squareRoot(q("9/4")) == q("3/2"));
  CHECK_FALSE(squareRoot(q("2")).has_value());
  FieldDesc f7 = FieldDesc::primeField(7);
  CHECK(squareRoot(Scalar::fromInt(f7, 2)).has_value());  // 3^2 = 2 mod 7
}

TEST_CASE("span coordinates are relative to the kept generators") {
  Span s(Qf, 3);
  CHECK(s.add({q("1"), q("0"), q("1")}));
  CHECK(s.add({q("0"), q("1"), q("1")}));
  CHECK_FALSE(s.add({q("1"), q("1"), q("2")}));
  auto c = s.coordinates({q("2"), q("3"), q("5")});
  REQUIRE(c);
  CHECK((*c)[0] == q("2"));
  CHECK((*c)[1] == q("3"));
  CHECK_FALSE(s.contains({q("0"), q("0"), q("1")}));
}
