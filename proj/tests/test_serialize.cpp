#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "serialize.hpp"

using namespace axial;
using fixtures::q;

namespace {

std::string tempPath(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

ErrorCode codeOf(const Json& j) {
  try {
    algebraFromJson(j);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::InvalidArgument;
}

Json smallAlgebra() {
  return Json::parse(R"({"field":{"kind":"Q"},"dim":2,"basis":["a","b"],
    "structure":[[["1","0"],["0","0"]],[["0","0"],["0","1"]]]})");
}

}  // namespace

TEST_CASE("algebra files round-trip bit-exactly") {
  for (const auto& t : fixtures::all()) {
    AlgebraFile f{t.alg, t.form->gram(), {}};
    for (const auto& a : t.axes) f.axes.push_back(a.coords());
    std::string path = tempPath("axial_roundtrip.json");
    saveAlgebra(path, f);
    AlgebraFile g = loadAlgebra(path);
    CHECK(algebraToJson(g) == algebraToJson(f));
    CHECK(algebraToJson(g).dump() == algebraToJson(f).dump());
    REQUIRE(g.gram);
    CHECK(*g.gram == *f.gram);
    CHECK(g.axes == f.axes);
    for (std::size_t i = 0; i < t.alg->dim(); ++i)
      for (std::size_t k = 0; k < t.alg->dim(); ++k) CHECK(g.algebra->product(i, k) == t.alg->product(i, k));
    std::remove(path.c_str());
  }
}

TEST_CASE("fields round-trip") {
  for (const FieldDesc& f :
       {FieldDesc::rationals(), FieldDesc::primeField(7), FieldDesc::primeField(3, true), FieldDesc::rationalFunctions("t")})
    CHECK(fieldFromJson(fieldToJson(f)) == f);
  Scalar s = parseScalar("(3*t^2-1)/(2*t)", FieldDesc::rationalFunctions("t"));
  CHECK(scalarFromJson(scalarToJson(s), FieldDesc::rationalFunctions("t")) == s);
}

TEST_CASE("integers are accepted as scalars") {
  Json j = smallAlgebra();
  j["structure"][0][0] = Json::array({1, 0});
  CHECK(algebraFromJson(j).algebra->dim() == 2);
}

TEST_CASE("schema errors") {
  Json missing = smallAlgebra();
  missing.erase("basis");
  CHECK(codeOf(missing) == ErrorCode::Schema);
  Json wrongDim = smallAlgebra();
  wrongDim["dim"] = 3;
  CHECK(codeOf(wrongDim) == ErrorCode::Schema);
  Json badScalar = smallAlgebra();
  badScalar["structure"][0][0][0] = "1/";
  CHECK(codeOf(badScalar) == ErrorCode::Schema);
  Json badField = smallAlgebra();
  badField["field"] = Json::parse(R"({"kind":"Fp","p":9})");
  CHECK(codeOf(badField) == ErrorCode::InvalidField);
  CHECK(codeOf(Json::array()) == ErrorCode::Schema);
}

TEST_CASE("asymmetric structure constants are rejected") {
  Json j = smallAlgebra();
  j["structure"][0][1] = Json::array({"1", "0"});
  CHECK(codeOf(j) == ErrorCode::AsymmetricStructure);
}

TEST_CASE("unreadable and malformed files") {
  try {
    loadAlgebra("/nonexistent/dir/x.json");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
  std::string path = tempPath("axial_bad.json");
  std::ofstream(path) << "{ not json";
  try {
    loadAlgebra(path);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Schema);
  }
  std::remove(path.c_str());
}

TEST_CASE("element text") {
  CHECK(parseElementText("[1, 0, -1/2]", fixtures::Q(), 3) == Vec{q("1"), q("0"), q("-1/2")});
  CHECK_THROWS_AS(parseElementText("[1, 0]", fixtures::Q(), 3), Error);
  CHECK_THROWS_AS(parseElementText("1, 0, 0", fixtures::Q(), 3), Error);
}
