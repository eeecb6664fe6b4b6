#include <doctest.h>

#include <json.hpp>
#include <string>

#include <axial/axial.h>

using nlohmann::json;

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { axial_string_free(s); }
  json parse() const { return json::parse(s); }
};

axial_algebra* build(const char* opts) {
  axial_algebra* alg = nullptr;
  REQUIRE(axial_construct(opts, &alg, nullptr) == AXIAL_OK);
  REQUIRE(alg);
  return alg;
}

}  // namespace

TEST_CASE("construct and check a Matsuo algebra") {
  axial_algebra* alg = nullptr;
  Owned rep;
  REQUIRE(axial_construct(R"({"kind":"matsuo","lines":"a,b,c","lambda":"1/2"})", &alg, &rep.s) == AXIAL_OK);
  CHECK(axial_algebra_dim(alg) == 3);
  json r = rep.parse();
  CHECK(r["schema_version"] == 1);
  CHECK(r["pass"] == true);

  Owned chk;
  CHECK(axial_run("check-axis", alg, R"({"lambda":"1/2","element":"[1,0,0]"})", &chk.s) == AXIAL_OK);
  CHECK(chk.parse()["command"] == "check-axis");

  Owned fro;
  CHECK(axial_run("frobenius", alg, "{}", &fro.s) == AXIAL_OK);
  CHECK(fro.parse()["data"]["determinant"] == "27/32");
  axial_algebra_free(alg);
}

TEST_CASE("JSON round trip through the handle") {
  axial_algebra* alg = build(R"({"kind":"toric"})");
  Owned text;
  REQUIRE(axial_algebra_to_json(alg, &text.s) == AXIAL_OK);
  axial_algebra* back = nullptr;
  REQUIRE(axial_algebra_from_json(text.s, &back) == AXIAL_OK);
  Owned again;
  REQUIRE(axial_algebra_to_json(back, &again.s) == AXIAL_OK);
  CHECK(std::string(text.s) == std::string(again.s));
  axial_algebra_free(back);
  axial_algebra_free(alg);
}

TEST_CASE("failed checks and errors are distinguished") {
  axial_algebra* alg = build(R"({"kind":"jordan-sym","k":3})");
  Owned jor;
  CHECK(axial_run("identity", alg, R"({"name":"jordan"})", &jor.s) == AXIAL_OK);

  axial_algebra* m3 = build(R"({"kind":"matsuo","lines":"a,b,c","lambda":"1/3"})");
  Owned fail;
  CHECK(axial_run("identity", m3, R"({"name":"jordan"})", &fail.s) == AXIAL_CHECK_FAILED);
  CHECK(fail.parse()["pass"] == false);

  char* none = nullptr;
  CHECK(axial_run("check-axis", alg, R"({"lambda":"1","element":"[1,0,0,0,0,0]"})", &none) == AXIAL_ERR_INPUT);
  CHECK(none == nullptr);
  CHECK(std::string(axial_last_error_kind()) == "BadLambda");
  CHECK(axial_run("no-such-command", alg, "{}", &none) == AXIAL_ERR_INPUT);
  CHECK(axial_run("identity", alg, "{not json", &none) == AXIAL_ERR_INPUT);
  CHECK(std::string(axial_last_error_kind()) == "Schema");
  axial_algebra_free(m3);
  axial_algebra_free(alg);
}

TEST_CASE("load errors") {
  axial_algebra* alg = nullptr;
  CHECK(axial_algebra_load("/nonexistent/x.json", &alg) == AXIAL_ERR_IO);
  CHECK(alg == nullptr);
  CHECK(std::string(axial_last_error()).size() > 0);
  const char* asym = R"({"field":{"kind":"Q"},"dim":2,"basis":["a","b"],
    "structure":[[["1","0"],["1","0"]],[["0","0"],["0","1"]]]})";
  CHECK(axial_algebra_from_json(asym, &alg) == AXIAL_ERR_INPUT);
  CHECK(std::string(axial_last_error_kind()) == "AsymmetricStructure");
}

TEST_CASE("orbit overflow is a failed check, not an error") {
  axial_algebra* alg = build(R"({"kind":"toric"})");
  Owned rep;
  CHECK(axial_run("orbit", alg, R"({"max":20})", &rep.s) == AXIAL_CHECK_FAILED);
  axial_algebra_free(alg);
}

TEST_CASE("a failing construction self-check yields a report and no algebra") {
  axial_algebra* alg = nullptr;
  Owned rep;
  CHECK(axial_construct(R"({"kind":"two-gen","lambda":"1/3","pi":"1/5"})", &alg, &rep.s) == AXIAL_CHECK_FAILED);
  CHECK(alg == nullptr);
  CHECK(rep.parse()["pass"] == false);
}

TEST_CASE("version") { CHECK(std::string(axial_version()).size() > 0); }
