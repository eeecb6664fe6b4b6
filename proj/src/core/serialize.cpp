#include "serialize.hpp"

#include <fstream>
#include <sstream>

namespace axial {

namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::Schema, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json fieldToJson(const FieldDesc& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return {{"kind", "Q"}};
    case FieldKind::PrimeField: {
      Json j{{"kind", "Fp"}, {"p", f.prime()}};
      if (f.prime() <= 5) j["allowSmall"] = true;
      return j;
    }
    case FieldKind::RationalFunctions: return {{"kind", "Qt"}, {"var", f.variable()}};
  }
  return {};
}

FieldDesc fieldFromJson(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) schema("field kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "Q") return FieldDesc::rationals();
  if (k == "Fp") {
    const Json& p = member(j, "p");
    if (!p.is_number_unsigned()) schema("field p must be a positive integer");
    bool small = j.contains("allowSmall") && j["allowSmall"].is_boolean() && j["allowSmall"].get<bool>();
    return FieldDesc::primeField(p.get<std::uint64_t>(), small);
  }
  if (k == "Qt") {
    const Json& v = member(j, "var");
    if (!v.is_string()) schema("field var must be a string");
    return FieldDesc::rationalFunctions(v.get<std::string>());
  }
  schema("unknown field kind '" + k + "'");
}

Json scalarToJson(const Scalar& s) { return s.str(); }

Scalar scalarFromJson(const Json& j, const FieldDesc& f) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_integer())
    text = std::to_string(j.get<long long>());
  else
    schema("scalar must be a string or an integer, got " + j.dump());
  try {
    return parseScalar(text, f);
  } catch (const Error& e) {
    schema("malformed scalar \"" + text + "\": " + e.what());
  }
}

Json vecToJson(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalarToJson(x));
  return a;
}

Vec vecFromJson(const Json& j, const FieldDesc& f, std::size_t dim) {
  if (!j.is_array()) schema("expected an array of scalars, got " + j.dump());
  if (j.size() != dim)
    schema("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  Vec v;
  v.reserve(dim);
  for (const auto& x : j) v.push_back(scalarFromJson(x, f));
  return v;
}

Json matrixToJson(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalarToJson(m.at(i, k)));
    a.push_back(std::move(row));
  }
  return a;
}

Matrix matrixFromJson(const Json& j, const FieldDesc& f, std::size_t n) {
  if (!j.is_array() || j.size() != n) schema("expected " + std::to_string(n) + " matrix rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vecFromJson(r, f, n));
  return Matrix::fromRows(f, rows, n);
}

Json algebraToJson(const AlgebraFile& file) {
  const Algebra& a = *file.algebra;
  Json structure = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vecToJson(a.product(i, k)));
    structure.push_back(std::move(row));
  }
  Json j{{"field", fieldToJson(a.field())}, {"dim", a.dim()}, {"basis", a.basisNames()}, {"structure", structure}};
  if (file.gram) j["form"] = {{"gram", matrixToJson(*file.gram)}};
  if (!file.axes.empty()) {
    Json axes = Json::array();
    for (const auto& v : file.axes) axes.push_back(vecToJson(v));
    j["axes"] = std::move(axes);
  }
  return j;
}

AlgebraFile algebraFromJson(const Json& j) {
  if (!j.is_object()) schema("algebra must be a JSON object");
  FieldDesc f = fieldFromJson(member(j, "field"));
  const Json& dimJ = member(j, "dim");
  if (!dimJ.is_number_unsigned()) schema("dim must be a non-negative integer");
  const std::size_t n = dimJ.get<std::size_t>();
  const Json& basis = member(j, "basis");
  if (!basis.is_array() || basis.size() != n) schema("basis must list " + std::to_string(n) + " names");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string()) schema("basis names must be strings");
    names.push_back(b.get<std::string>());
  }
  const Json& st = member(j, "structure");
  if (!st.is_array() || st.size() != n) schema("structure must have " + std::to_string(n) + " rows");
  std::vector<std::vector<Vec>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!st[i].is_array() || st[i].size() != n)
      schema("structure row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) table[i].push_back(vecFromJson(st[i][k], f, n));
  }
  AlgebraFile file;
  file.algebra = makeAlgebra(f, std::move(names), std::move(table));
  if (j.contains("form") && !j["form"].is_null()) file.gram = matrixFromJson(member(j["form"], "gram"), f, n);
  if (j.contains("axes")) {
    if (!j["axes"].is_array()) schema("axes must be an array");
    for (const auto& v : j["axes"]) file.axes.push_back(vecFromJson(v, f, n));
  }
  return file;
}

AlgebraFile loadAlgebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const Json::exception& e) {
    schema(path + ": " + e.what());
  }
  return algebraFromJson(j);
}

void saveAlgebra(const std::string& path, const AlgebraFile& file) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write " + path);
  out << algebraToJson(file).dump(2) << "\n";
  if (!out) fail(ErrorCode::Io, "write failed: " + path);
}

Vec parseElementText(const std::string& text, const FieldDesc& f, std::size_t dim) {
  std::size_t lo = text.find('['), hi = text.rfind(']');
  if (lo == std::string::npos || hi == std::string::npos || hi < lo)
    fail(ErrorCode::Parse, "element must be written as [c1, c2, ...]: " + text);
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != '"' && c != '\'') {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  if (parts.size() != dim)
    fail(ErrorCode::DimensionMismatch,
         "element has " + std::to_string(parts.size()) + " coordinates, algebra has dimension " + std::to_string(dim));
  Vec v;
  for (const auto& p : parts) v.push_back(parseScalar(p, f));
  return v;
}

}  // namespace axial
