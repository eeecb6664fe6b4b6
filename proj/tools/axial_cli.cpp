// Command-line front end; talks to the library only through the C API.

#include <axial/axial.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using Json = nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exitFor(int status) {
  if (status == AXIAL_OK) return kExitPass;
  if (status == AXIAL_CHECK_FAILED) return kExitFail;
  return kExitUsage;
}

struct Common {
  std::string algebra;
  std::string lambda;
  bool json = false;
};

struct Owned {
  char* p = nullptr;
  ~Owned() { axial_string_free(p); }
};

struct Handle {
  axial_algebra* p = nullptr;
  ~Handle() { axial_algebra_free(p); }
};

void reportError() {
  std::cerr << "error";
  if (*axial_last_error_kind()) std::cerr << " [" << axial_last_error_kind() << "]";
  std::cerr << ": " << axial_last_error() << "\n";
}

// Field flag: Q, Fp:<p> (or F<p>), Qt:<var>, or a JSON object.
Json parseField(const std::string& s) {
  if (s.empty() || s == "Q") return {{"kind", "Q"}};
  if (s.front() == '{') return Json::parse(s);
  auto num = [&](const std::string& t) -> std::uint64_t {
    std::size_t used = 0;
    unsigned long long p = std::stoull(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad prime");
    return p;
  };
  if (s.rfind("Fp:", 0) == 0) return {{"kind", "Fp"}, {"p", num(s.substr(3))}};
  if (s.size() > 1 && s[0] == 'F') return {{"kind", "Fp"}, {"p", num(s.substr(1))}};
  if (s.rfind("Qt:", 0) == 0) return {{"kind", "Qt"}, {"var", s.substr(3)}};
  throw std::invalid_argument("unknown field '" + s + "' (use Q, Fp:7 or Qt:t)");
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void printHuman(const Json& r, std::ostream& os) {
  os << r["command"].get<std::string>() << ": " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r["checks"]) {
    os << "  [" << (c["passed"].get<bool>() ? "ok" : "FAILED") << "] " << c["name"].get<std::string>();
    const std::string d = c["detail"].get<std::string>();
    if (!d.empty()) os << " -- " << d;
    os << "\n";
  }
  const Json& data = r["data"];
  for (const auto& [k, v] : data.items()) {
    if (v.is_primitive()) os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  if (data.contains("violations") && data["violations"].is_array())
    for (const auto& v : data["violations"]) os << "  violation: " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  if (data.contains("idempotents"))
    for (const auto& i : data["idempotents"]) {
      os << "  idempotent " << i["label"].get<std::string>();
      if (i["trivial"].get<bool>())
        os << " (trivial)";
      else
        os << (i["primitiveJordan"].get<bool>() ? " : primitive axis of Jordan type" : " : NOT a primitive Jordan axis");
      os << "\n";
    }
  if (data.contains("notes"))
    for (const auto& n : data["notes"]) os << "  note: " << n.get<std::string>() << "\n";
  if (data.contains("witness") && data["witness"].is_object()) {
    const Json& w = data["witness"];
    for (const auto& [k, v] : w["x"].items()) os << "  witness " << k << " = " << v["text"].get<std::string>() << "\n";
    for (const auto& [k, v] : w["E"].items()) os << "  witness " << k << " = " << v["text"].get<std::string>() << "\n";
    os << "  value = " << w["value"]["text"].get<std::string>() << "\n";
  }
  if (data.contains("orbit"))
    for (const auto& x : data["orbit"]) os << "  axis " << x["text"].get<std::string>() << "\n";
}

int emit(int status, char* report, bool json) {
  if (!report) {
    reportError();
    return exitFor(status);
  }
  Json r = Json::parse(report);
  if (json)
    std::cout << r.dump(2) << "\n";
  else
    printHuman(r, std::cout);
  return exitFor(status);
}

int runAnalysis(const std::string& command, const Common& c, Json opts) {
  Handle h;
  if (axial_algebra_load(c.algebra.c_str(), &h.p) != AXIAL_OK) {
    reportError();
    return kExitUsage;
  }
  if (!c.lambda.empty()) opts["lambda"] = c.lambda;
  Owned report;
  int status = axial_run(command.c_str(), h.p, opts.dump().c_str(), &report.p);
  return emit(status, report.p, c.json);
}

std::size_t defaultOrbitCap() {
  if (const char* env = std::getenv("AXIAL_MAX_ORBIT")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring AXIAL_MAX_ORBIT=" << env << "\n";
    }
  }
  return 1000;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for axial algebras given by structure constants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(axial_version()));

  Common common;
  auto addCommon = [&](CLI::App* sub, bool needsAlgebra = true) {
    if (needsAlgebra) sub->add_option("--algebra", common.algebra, "Algebra JSON file")->required();
    sub->add_option("--lambda", common.lambda, "Eigenvalue lambda, e.g. 1/2");
    sub->add_flag("--json", common.json, "Print the JSON report");
  };

  // construct
  auto* cons = app.add_subcommand("construct", "Build a stock algebra and write its JSON");
  std::string kind, pi, lines, points, field = "Q", output;
  std::size_t k = 0;
  bool flatAnnihilating = false;
  cons->add_option("kind", kind, "toric | two-gen | matsuo | jordan-sym")
      ->required()
      ->check(CLI::IsMember({"toric", "two-gen", "matsuo", "jordan-sym"}));
  cons->add_option("--pi", pi, "Form value (a,b) for two-gen");
  cons->add_option("--lines", lines, "Triple system lines, e.g. \"a,b,c;b,d,e\"");
  cons->add_option("--points", points, "Comma-separated point order (matsuo)");
  cons->add_option("--k", k, "Matrix size for jordan-sym");
  cons->add_option("--field", field, "Q, Fp:<p> or Qt:<var>");
  cons->add_flag("--flat-annihilating", flatAnnihilating, "two-gen variant where s multiplies everything to 0");
  cons->add_option("-o,--output", output, "Output file (stdout if omitted)");
  addCommon(cons, false);

  // analyses
  std::string element, text, name, a, b, eps;
  std::vector<std::string> axes, pool, nilpotent;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool noPrimitive = false, noJordan = false, withMiyamoto = false, solve = false, distinct = false;
  std::size_t maxOrbit = defaultOrbitCap();

  auto* checkAxis = app.add_subcommand("check-axis", "Certify an element as a (primitive, Jordan-type) axis");
  addCommon(checkAxis);
  checkAxis->add_option("--element", element, "Coordinates, e.g. \"[1,0,-1/2]\"")->required();
  checkAxis->add_flag("--no-primitive", noPrimitive, "Do not require primitivity");
  checkAxis->add_flag("--no-jordan", noJordan, "Do not check the fusion rules");
  checkAxis->add_flag("--miyamoto", withMiyamoto, "Also require the Miyamoto map to be an automorphism");

  auto* fusion = app.add_subcommand("fusion", "Check the fusion rules of an axis");
  addCommon(fusion);
  fusion->add_option("--element", element, "Axis coordinates")->required();

  auto* frob = app.add_subcommand("frobenius", "Report the stored form or solve for associative forms");
  addCommon(frob);
  frob->add_flag("--solve", solve, "Solve even if the file stores a form");
  frob->add_option("--axis", axes, "Axis normalized to (a,a) = 1 (repeatable; default: stored axes)")->allow_extra_args(false);

  auto* rad = app.add_subcommand("radical", "Radical of the form (and axial radical with --lambda)");
  addCommon(rad);
  rad->add_option("--axis", axes, "Axes (repeatable; default: stored axes)")->allow_extra_args(false);

  auto* ident = app.add_subcommand("identity", "Decide whether a polynomial is an identity of the algebra");
  addCommon(ident);
  auto* nameOpt = ident->add_option("--name", name, "Built-in identity name");
  auto* textOpt = ident->add_option("--text", text, "Polynomial in x1.., E1.., lam, B(p,q)");
  nameOpt->excludes(textOpt);
  ident->add_option("--pool", pool, "Idempotent pool for E-slots (repeatable; default: stored axes)")->allow_extra_args(false);
  ident->add_flag("--distinct", distinct, "E-slots take pairwise different pool elements");

  auto* miy = app.add_subcommand("miyamoto", "Miyamoto map of an axis");
  addCommon(miy);
  miy->add_option("--element", element, "Axis coordinates")->required();

  auto* solid = app.add_subcommand("solid", "Audit the idempotents of the subalgebra generated by two axes");
  addCommon(solid);
  solid->add_option("--a", a, "First axis")->required();
  solid->add_option("--b", b, "Second axis")->required();
  solid->add_option("--eps", eps, "Comma-separated family parameters to sample");

  auto* orbit = app.add_subcommand("orbit", "Close a set of axes under Miyamoto maps");
  addCommon(orbit);
  orbit->add_option("--axis", axes, "Axes (repeatable; default: stored axes)")->allow_extra_args(false);
  orbit->add_option("--max", maxOrbit, "Orbit size cap (default: AXIAL_MAX_ORBIT or 1000)");

  auto* trace = app.add_subcommand("audit-trace", "Pairs with 4-nilpotent product must have (x,y) = 0");
  addCommon(trace);
  trace->add_option("--pair", pairs, "Pair X Y (repeatable; default: all basis pairs)")->allow_extra_args(false);
  trace->add_option("--nilpotent", nilpotent, "Also report whether these elements are 4-nilpotent")->allow_extra_args(false);
  trace->add_option("--axis", axes, "Axes used to normalize a solved form")->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    auto listOr = [](const std::vector<std::string>& xs) { return xs.empty() ? Json() : Json(xs); };

    if (cons->parsed()) {
      Json opts{{"kind", kind}, {"field", parseField(field)}};
      if (!common.lambda.empty()) opts["lambda"] = common.lambda;
      if (!pi.empty()) opts["pi"] = pi;
      if (!lines.empty()) opts["lines"] = lines;
      if (!points.empty()) opts["points"] = splitList(points);
      if (k) opts["k"] = k;
      if (flatAnnihilating) opts["flatAnnihilating"] = true;
      Handle h;
      Owned report;
      int status = axial_construct(opts.dump().c_str(), &h.p, &report.p);
      if (status != AXIAL_OK) return emit(status, report.p, common.json);
      if (output.empty()) {
        Owned js;
        if (axial_algebra_to_json(h.p, &js.p) != AXIAL_OK) {
          reportError();
          return kExitUsage;
        }
        std::cout << js.p << "\n";
        return kExitPass;
      }
      if (axial_algebra_save(h.p, output.c_str()) != AXIAL_OK) {
        reportError();
        return kExitUsage;
      }
      return emit(status, report.p, common.json);
    }
    if (checkAxis->parsed()) {
      Json opts{{"element", element}, {"primitive", !noPrimitive}, {"jordan", !noJordan}, {"miyamoto", withMiyamoto}};
      return runAnalysis("check-axis", common, opts);
    }
    if (fusion->parsed()) return runAnalysis("fusion", common, {{"element", element}});
    if (frob->parsed()) return runAnalysis("frobenius", common, {{"solve", solve}, {"axes", listOr(axes)}});
    if (rad->parsed()) return runAnalysis("radical", common, {{"axes", listOr(axes)}});
    if (ident->parsed()) {
      Json opts{{"pool", listOr(pool)}};
      if (!name.empty()) opts["name"] = name;
      if (!text.empty()) opts["text"] = text;
      if (distinct) opts["distinct"] = true;
      return runAnalysis("identity", common, opts);
    }
    if (miy->parsed()) return runAnalysis("miyamoto", common, {{"element", element}});
    if (solid->parsed()) return runAnalysis("solid", common, {{"a", a}, {"b", b}, {"eps", splitList(eps)}});
    if (orbit->parsed()) return runAnalysis("orbit", common, {{"axes", listOr(axes)}, {"max", maxOrbit}});
    if (trace->parsed()) {
      Json opts{{"axes", listOr(axes)}};
      if (!pairs.empty()) {
        Json ps = Json::array();
        for (const auto& [x, y] : pairs) ps.push_back({x, y});
        opts["pairs"] = ps;
      }
      if (!nilpotent.empty()) opts["nilpotent"] = nilpotent;
      return runAnalysis("audit-trace", common, opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
