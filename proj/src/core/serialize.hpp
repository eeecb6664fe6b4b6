#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"

namespace axial {

using Json = nlohmann::json;

// {"kind":"Q"} | {"kind":"Fp","p":7} | {"kind":"Qt","var":"t"}
Json fieldToJson(const FieldDesc& f);
FieldDesc fieldFromJson(const Json& j);

// Scalars are written as canonical strings; integers are also accepted on
// input. Malformed entries raise Schema.
Json scalarToJson(const Scalar& s);
Scalar scalarFromJson(const Json& j, const FieldDesc& f);
Json vecToJson(const Vec& v);
Vec vecFromJson(const Json& j, const FieldDesc& f, std::size_t dim);
Json matrixToJson(const Matrix& m);
Matrix matrixFromJson(const Json& j, const FieldDesc& f, std::size_t n);

// Algebra JSON with optional "form": {"gram": [...]} and "axes": [[...], ...].
struct AlgebraFile {
  AlgebraPtr algebra;
  std::optional<Matrix> gram;
  std::vector<Vec> axes;
};

Json algebraToJson(const AlgebraFile& file);
AlgebraFile algebraFromJson(const Json& j);

// Raises Io on unreadable files and Schema on invalid JSON.
AlgebraFile loadAlgebra(const std::string& path);
void saveAlgebra(const std::string& path, const AlgebraFile& file);

// Element given as "[1, 0, -1/2]" or a JSON array of strings/integers.
Vec parseElementText(const std::string& text, const FieldDesc& f, std::size_t dim);

}  // namespace axial
