#include "commands.hpp"

#include "axes.hpp"
#include "constructions.hpp"
#include "frobenius.hpp"
#include "identities.hpp"
#include "solidity.hpp"

namespace axial::capi {

void Report::check(const std::string& name, bool passed, const std::string& detail) {
  checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c["passed"].get<bool>()) return false;
  return true;
}

Json Report::toJson(double ms) const {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"checks", checks},
          {"pass", pass()},                   {"data", data},       {"timing_ms", ms}};
}

namespace {

// ------------------------------------------------------------ option access

std::optional<Scalar> scalarOpt(const Json& opts, const char* key, const FieldDesc& f) {
  if (!opts.contains(key) || opts[key].is_null()) return std::nullopt;
  const Json& v = opts[key];
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number_integer())
    text = std::to_string(v.get<long long>());
  else
    fail(ErrorCode::InvalidArgument, std::string("option ") + key + " must be a scalar string");
  return parseScalar(text, f);
}

Element elementFrom(const Json& v, const AlgebraPtr& alg) {
  if (v.is_string()) return Element(alg, parseElementText(v.get<std::string>(), alg->field(), alg->dim()));
  return Element(alg, vecFromJson(v, alg->field(), alg->dim()));
}

Element elementOpt(const Json& opts, const char* key, const AlgebraPtr& alg) {
  if (!opts.contains(key)) fail(ErrorCode::InvalidArgument, std::string("missing option ") + key);
  return elementFrom(opts[key], alg);
}

std::vector<Element> elementList(const Json& opts, const char* key, const AlgebraFile& file) {
  std::vector<Element> out;
  if (opts.contains(key) && !opts[key].is_null()) {
    if (!opts[key].is_array()) fail(ErrorCode::InvalidArgument, std::string("option ") + key + " must be a list");
    for (const auto& v : opts[key]) out.push_back(elementFrom(v, file.algebra));
  } else {
    for (const auto& v : file.axes) out.push_back(Element(file.algebra, v));
  }
  return out;
}

Scalar lambdaFor(const Json& opts, const Element& x) {
  const FieldDesc& f = x.algebra()->field();
  if (auto l = scalarOpt(opts, "lambda", f)) {
    if (l->isZero() || l->isOne()) fail(ErrorCode::BadLambda, "lambda must not be 0 or 1");
    return *l;
  }
  if (auto l = inferLambda(x)) return *l;
  fail(ErrorCode::InvalidArgument, "lambda not given and not inferable from " + x.str());
}

bool flag(const Json& opts, const char* key, bool dflt) {
  if (!opts.contains(key) || opts[key].is_null()) return dflt;
  if (!opts[key].is_boolean()) fail(ErrorCode::InvalidArgument, std::string("option ") + key + " must be a boolean");
  return opts[key].get<bool>();
}

// The form stored with the algebra, or the unique associative form
// normalized at the given axes.
BilinearForm formFor(const AlgebraFile& file, const std::vector<Element>& normalize) {
  if (file.gram) return BilinearForm(file.algebra, *file.gram);
  std::vector<FormConstraint> cs;
  for (const auto& a : normalize) cs.push_back({a, a, Scalar::one(file.algebra->field())});
  FormSolution s = solveFrobenius(file.algebra, cs);
  if (!s.unique())
    fail(ErrorCode::MissingForm, "no form stored with the algebra and the normalization does not determine one");
  return *s.particular;
}

// --------------------------------------------------------------- rendering

Json elementJson(const Element& x) { return {{"coords", vecToJson(x.coords())}, {"text", x.str()}}; }

Json scalarsJson(const std::vector<Scalar>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

Json elementsJson(const std::vector<Element>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(elementJson(x));
  return a;
}

void fusionChecks(Report& r, const FusionVerdicts& v, const std::string& lam) {
  r.check("fusion A01*A01 in A01", v.basicA01Subalgebra);
  r.check("fusion A01*A" + lam + " in A" + lam, v.moduleRule);
  r.check("fusion A" + lam + "*A" + lam + " in A01", v.preJordanOffDiagonal);
  r.check("Jordan fusion A0*A0 in A0", v.jordanA0Squared);
  r.data["violations"] = v.violations;
}

Json axisReportJson(const AxisReport& a) {
  return {{"lambda", a.lambda.str()},
          {"isIdempotent", a.isIdempotent},
          {"spectrum", scalarsJson(a.spectrum)},
          {"minimalPolynomial", a.minimalPolynomial},
          {"semisimple", a.semisimple},
          {"isAxis", a.isAxis},
          {"primitive", a.primitive},
          {"dims", {{"0", a.dim0}, {"1", a.dim1}, {"lambda", a.dimLambda}}},
          {"jordanType", a.fusion.jordanType()},
          {"miyamotoIsAutomorphism", a.miyamotoIsAutomorphism}};
}

// ---------------------------------------------------------------- commands

void cmdCheckAxis(Report& r, const AlgebraFile& file, const Json& opts) {
  Element x = elementOpt(opts, "element", file.algebra);
  Scalar lam = lambdaFor(opts, x);
  AxisReport a = checkAxis(x, lam);
  r.data = axisReportJson(a);
  r.data["element"] = elementJson(x);
  r.check("idempotent", a.isIdempotent, a.isIdempotent ? "" : "x^2 != x");
  r.check("spectrum in {0, 1, " + lam.str() + "}", a.spectrumInTarget, "minimal polynomial " + a.minimalPolynomial);
  r.check("semisimple", a.semisimple);
  r.check("axis relation L^3 = (lambda+1) L^2 - lambda L", a.ax1Holds);
  if (flag(opts, "primitive", true))
    r.check("primitive (A1 = span{a})", a.primitive, "dim A1 = " + std::to_string(a.dim1));
  if (flag(opts, "jordan", true) && a.isAxis) {
    fusionChecks(r, a.fusion, lam.str());
  }
  if (flag(opts, "miyamoto", false)) r.check("Miyamoto map is an automorphism", a.miyamotoIsAutomorphism);
}

void cmdFusion(Report& r, const AlgebraFile& file, const Json& opts) {
  Element x = elementOpt(opts, "element", file.algebra);
  Scalar lam = lambdaFor(opts, x);
  EigenData e = eigenDecompose(x, {Scalar::zero(lam.field()), Scalar::one(lam.field()), lam});
  r.data["eigenvalues"] = scalarsJson(e.eigenvalues());
  r.check("eigenspaces span the algebra", e.complete);
  if (!e.complete) return;
  Json spaces = Json::object();
  for (const auto& s : e.spaces) spaces[s.value.str()] = elementsJson(s.basis);
  r.data["eigenspaces"] = spaces;
  fusionChecks(r, checkFusion(x, lam, e), lam.str());
}

void cmdFrobenius(Report& r, const AlgebraFile& file, const Json& opts) {
  const AlgebraPtr& alg = file.algebra;
  if (file.gram && !flag(opts, "solve", false)) {
    BilinearForm form(alg, *file.gram);
    r.data["source"] = "stored";
    r.data["gram"] = matrixToJson(form.gram());
    r.data["determinant"] = form.determinant().str();
    r.data["radicalDim"] = radical(form).size();
    r.check("stored form is symmetric and associative", true);
    return;
  }
  std::vector<FormConstraint> cs;
  for (const auto& a : elementList(opts, "axes", file)) cs.push_back({a, a, Scalar::one(alg->field())});
  if (opts.contains("constraints")) {
    for (const auto& c : opts["constraints"]) {
      Element x = elementOpt(c, "x", alg), y = elementOpt(c, "y", alg);
      auto v = scalarOpt(c, "value", alg->field());
      if (!v) fail(ErrorCode::InvalidArgument, "constraint without value");
      cs.push_back({x, y, *v});
    }
  }
  r.data["source"] = "solved";
  r.data["constraints"] = cs.size();
  FormSolution s;
  try {
    s = solveFrobenius(alg, cs);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconsistent) throw;
    r.check("associative form exists", false, e.what());
    return;
  }
  r.check("associative form exists", true);
  r.data["gram"] = matrixToJson(s.particular->gram());
  r.data["unique"] = s.unique();
  r.data["freeParameters"] = s.homogeneousBasis.size();
  if (s.unique()) {
    const BilinearForm& form = *s.particular;
    r.data["determinant"] = form.determinant().str();
    r.data["radicalDim"] = radical(form).size();
  }
}

void cmdRadical(Report& r, const AlgebraFile& file, const Json& opts) {
  std::vector<Element> axes = elementList(opts, "axes", file);
  BilinearForm form = formFor(file, axes);
  std::vector<Element> rad = radical(form);
  r.data["radical"] = elementsJson(rad);
  r.data["radicalDim"] = rad.size();
  r.data["determinant"] = form.determinant().str();
  if (auto lam = scalarOpt(opts, "lambda", file.algebra->field())) {
    auto ar = axialRadical(file.algebra, axes, *lam);
    r.data["axialRadical"] = elementsJson(ar);
  }
  r.check("form is nondegenerate (radical = 0)", rad.empty(), "radical dimension " + std::to_string(rad.size()));
}

Json witnessJson(const Witness& w) {
  Json xs = Json::object(), es = Json::object();
  for (const auto& [i, x] : w.x) xs["x" + std::to_string(i)] = elementJson(x);
  for (const auto& [i, x] : w.e) es["E" + std::to_string(i)] = elementJson(x);
  return {{"x", xs}, {"E", es}, {"value", elementJson(w.value)}, {"forComponent", w.forComponent},
          {"polynomial", w.evaluated.str()}};
}

void cmdIdentity(Report& r, const AlgebraFile& file, const Json& opts) {
  const AlgebraPtr& alg = file.algebra;
  std::optional<Scalar> lam = scalarOpt(opts, "lambda", alg->field());
  if (lam && (lam->isZero() || lam->isOne())) fail(ErrorCode::BadLambda, "lambda must not be 0 or 1");
  GenPoly f;
  bool distinct = false;
  std::string label;
  if (opts.contains("name")) {
    label = opts["name"].get<std::string>();
    const CatalogEntry& e = catalogEntry(label);
    distinct = e.distinctSlots;
    mpq_class q;
    f = (lam && lam->asRational(q)) ? builtinIdentity(label, lam) : builtinIdentity(label);
  } else if (opts.contains("text")) {
    label = opts["text"].get<std::string>();
    f = parsePoly(label);
  } else {
    fail(ErrorCode::InvalidArgument, "identity needs a name or a text");
  }
  distinct = flag(opts, "distinct", distinct);
  std::vector<Element> pool = elementList(opts, "pool", file);
  std::optional<BilinearForm> form;
  if (f.hasBrackets()) form = formFor(file, pool);
  IdentityOptions io;
  io.form = form ? &*form : nullptr;
  io.lambda = lam;
  io.distinctSlots = distinct;
  IdentityVerdict v = holdsAsIdentity(f, alg, pool, io);
  r.data["identity"] = label;
  r.data["polynomial"] = f.str();
  r.data["method"] = v.method;
  r.data["components"] = v.components;
  r.data["evaluations"] = v.evaluations;
  r.data["poolSize"] = pool.size();
  if (v.witness) r.data["witness"] = witnessJson(*v.witness);
  r.check("identity holds", v.holds, v.witness ? "nonzero value " + v.witness->value.str() : "");
}

void cmdMiyamoto(Report& r, const AlgebraFile& file, const Json& opts) {
  Element x = elementOpt(opts, "element", file.algebra);
  Scalar lam = lambdaFor(opts, x);
  MiyamotoMap m = miyamoto(x, lam);
  r.data["matrix"] = matrixToJson(m.matrix);
  Json images = Json::array();
  for (std::size_t i = 0; i < file.algebra->dim(); ++i) images.push_back(elementJson(m.apply(Element::basis(file.algebra, i))));
  r.data["images"] = images;
  r.check("involution", m.involution);
  r.check("automorphism", m.isAutomorphism);
}

void cmdSolid(Report& r, const AlgebraFile& file, const Json& opts) {
  const AlgebraPtr& alg = file.algebra;
  Element a = elementOpt(opts, "a", alg), b = elementOpt(opts, "b", alg);
  Scalar lam = lambdaFor(opts, a);
  std::vector<Scalar> samples;
  if (opts.contains("eps"))
    for (const auto& v : opts["eps"]) samples.push_back(parseScalar(v.is_string() ? v.get<std::string>() : v.dump(), alg->field()));
  BilinearForm form = formFor(file, {a, b});
  SolidityReport s = solidAudit(a, b, form, lam, samples);
  r.data["class"] = pairKindName(s.pairClass.kind);
  r.data["pi"] = s.pairClass.pi.str();
  r.data["quarterSpecial"] = s.pairClass.quarterSpecial;
  r.data["subalgebraDim"] = s.subalgebraDim;
  Json ids = Json::array();
  std::vector<Element> sampled, certified;
  for (const auto& i : s.idempotents) {
    Json j{{"label", i.label}, {"trivial", i.trivial}, {"symbolic", i.symbolic}};
    if (!i.trivial) {
      j["report"] = axisReportJson(i.report);
      j["primitiveJordan"] = i.report.primitiveJordan();
    }
    if (!i.symbolic && !i.trivial) {
      sampled.push_back(i.x);
      if (i.report.primitiveJordan()) certified.push_back(i.x);
    }
    ids.push_back(std::move(j));
  }
  r.data["idempotents"] = ids;
  r.data["notes"] = s.notes;
  if (s.witness) r.data["witness"] = *s.witness;
  if (!sampled.empty()) {
    Subalgebra B = generateSubalgebra({a, b});
    HardnessProbe h = hardnessProbe(B, sampled, certified);
    r.data["hardness"] = {{"idempotentRank", h.idempotentRank}, {"axisRank", h.axisRank},
                          {"jointRank", h.jointRank}, {"isHard", h.isHard}};
  }
  r.check("nontrivial idempotents are primitive axes", s.allPrimitiveAxes, s.witness.value_or(""));
  r.check("nontrivial idempotents are of Jordan type", s.allJordanType, s.witness.value_or(""));
}

void cmdOrbit(Report& r, const AlgebraFile& file, const Json& opts) {
  std::vector<Element> axes = elementList(opts, "axes", file);
  if (axes.empty()) fail(ErrorCode::InvalidArgument, "orbit needs axes");
  Scalar lam = lambdaFor(opts, axes.front());
  std::size_t cap = 1000;
  if (opts.contains("max")) cap = opts["max"].get<std::size_t>();
  r.data["cap"] = cap;
  try {
    std::vector<Element> orbit = axisOrbit(axes, lam, cap);
    r.data["size"] = orbit.size();
    r.data["orbit"] = elementsJson(orbit);
    r.check("orbit closes within " + std::to_string(cap) + " axes", true, std::to_string(orbit.size()) + " axes");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OrbitOverflow) throw;
    r.check("orbit closes within " + std::to_string(cap) + " axes", false, e.what());
  }
}

void cmdAuditTrace(Report& r, const AlgebraFile& file, const Json& opts) {
  const AlgebraPtr& alg = file.algebra;
  BilinearForm form = formFor(file, elementList(opts, "axes", file));
  std::vector<TraceViolation> vs;
  if (opts.contains("pairs")) {
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& p : opts["pairs"]) {
      if (!p.is_array() || p.size() != 2) fail(ErrorCode::InvalidArgument, "pairs must be [x, y] lists");
      pairs.emplace_back(elementFrom(p[0], alg), elementFrom(p[1], alg));
    }
    r.data["pairs"] = pairs.size();
    vs = traceAdmissibilityAudit(form, pairs);
  } else {
    r.data["pairs"] = alg->dim() * alg->dim();
    vs = traceAdmissibilityAudit(form);
  }
  Json jv = Json::array();
  for (const auto& v : vs) jv.push_back({{"x", elementJson(v.x)}, {"y", elementJson(v.y)}, {"value", v.value.str()}});
  r.data["violations"] = jv;
  if (opts.contains("nilpotent")) {
    Json nil = Json::array();
    for (const auto& v : opts["nilpotent"]) {
      Element y = elementFrom(v, alg);
      nil.push_back({{"element", elementJson(y)}, {"fourNilpotent", is4Nilpotent(y)}});
    }
    r.data["nilpotent"] = nil;
  }
  r.check("4-nilpotent products are trace-free", vs.empty(), std::to_string(vs.size()) + " violations");
}

}  // namespace

Report runCommand(const std::string& command, const AlgebraFile& file, const Json& opts) {
  if (!file.algebra) fail(ErrorCode::InvalidArgument, "no algebra");
  if (!opts.is_object()) fail(ErrorCode::InvalidArgument, "options must be a JSON object");
  Report r;
  r.command = command;
  if (command == "check-axis")
    cmdCheckAxis(r, file, opts);
  else if (command == "fusion")
    cmdFusion(r, file, opts);
  else if (command == "frobenius")
    cmdFrobenius(r, file, opts);
  else if (command == "radical")
    cmdRadical(r, file, opts);
  else if (command == "identity")
    cmdIdentity(r, file, opts);
  else if (command == "miyamoto")
    cmdMiyamoto(r, file, opts);
  else if (command == "solid")
    cmdSolid(r, file, opts);
  else if (command == "orbit")
    cmdOrbit(r, file, opts);
  else if (command == "audit-trace")
    cmdAuditTrace(r, file, opts);
  else
    fail(ErrorCode::UnknownName, "unknown command '" + command + "'");
  return r;
}

Report construct(const Json& opts, AlgebraFile& out) {
  if (!opts.is_object()) fail(ErrorCode::InvalidArgument, "options must be a JSON object");
  Report r;
  r.command = "construct";
  if (!opts.contains("kind") || !opts["kind"].is_string()) fail(ErrorCode::InvalidArgument, "construct needs a kind");
  const std::string kind = opts["kind"].get<std::string>();
  FieldDesc f = opts.contains("field") ? fieldFromJson(opts["field"]) : FieldDesc::rationals();
  auto lambda = [&] {
    auto l = scalarOpt(opts, "lambda", f);
    return l ? *l : Scalar::one(f) / Scalar::fromInt(f, 2);
  };
  r.data["kind"] = kind;
  out = AlgebraFile{};
  try {
    if (kind == "toric") {
      ToricAlgebra t = toricEUF(f);
      out.algebra = t.algebra;
      out.gram = t.form.gram();
      out.axes = {t.family(Scalar::one(f)).coords(), t.family(Scalar::fromInt(f, 2)).coords()};
    } else if (kind == "two-gen") {
      auto pi = scalarOpt(opts, "pi", f);
      bool flat = flag(opts, "flatAnnihilating", false);
      if (!pi && !flat) fail(ErrorCode::InvalidArgument, "two-gen needs pi");
      TwoGenAlgebra t = universal2Gen(lambda(), pi ? *pi : Scalar::zero(f), f, flat);
      out.algebra = t.algebra;
      if (t.form) out.gram = t.form->gram();
      out.axes = {t.a.coords(), t.b.coords()};
      r.data["gamma"] = t.gamma.str();
      r.data["pi"] = t.pi.str();
      r.data["formUnique"] = t.formUnique;
    } else if (kind == "matsuo") {
      if (!opts.contains("lines") || !opts["lines"].is_string()) fail(ErrorCode::InvalidArgument, "matsuo needs lines");
      std::vector<std::string> points;
      if (opts.contains("points")) points = opts["points"].get<std::vector<std::string>>();
      MatsuoAlgebra m = matsuoFromTripleSystem(TripleSystem::parse(opts["lines"].get<std::string>(), points), lambda(), f);
      out.algebra = m.algebra;
      if (m.form) out.gram = m.form->gram();
      for (const auto& a : m.axes) out.axes.push_back(a.coords());
    } else if (kind == "jordan-sym") {
      if (!opts.contains("k") || !opts["k"].is_number_unsigned()) fail(ErrorCode::InvalidArgument, "jordan-sym needs k");
      std::size_t k = opts["k"].get<std::size_t>();
      if (k < 2) fail(ErrorCode::InvalidArgument, "k must be at least 2");
      JordanMatrices j = jordanSymmetricMatrices(k, f);
      out.algebra = j.algebra;
      out.gram = j.traceForm.gram();
      for (std::size_t i = 0; i < k; ++i) out.axes.push_back(Element::basis(j.algebra, j.index(i, i)).coords());
    } else {
      fail(ErrorCode::UnknownName, "unknown construction '" + kind + "'");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SelfCheckFailed) throw;
    out = AlgebraFile{};
    r.check("construction self-checks", false, e.what());
    return r;
  }
  r.check("construction self-checks", true);
  r.data["dim"] = out.algebra->dim();
  r.data["basis"] = out.algebra->basisNames();
  r.data["hasForm"] = out.gram.has_value();
  r.data["axes"] = out.axes.size();
  return r;
}

}  // namespace axial::capi
