#pragma once

#include <string>

#include "serialize.hpp"

namespace axial::capi {

// Report layout:
//   {"schema_version": 1, "command": ..., "checks": [{"name","passed","detail"}],
//    "pass": bool, "data": {...}, "timing_ms": number}
inline constexpr int kSchemaVersion = 1;

struct Report {
  std::string command;
  Json checks = Json::array();
  Json data = Json::object();

  void check(const std::string& name, bool passed, const std::string& detail = "");
  bool pass() const;
  Json toJson(double ms) const;
};

Report runCommand(const std::string& command, const AlgebraFile& file, const Json& opts);

// Leaves `out.algebra` null when a construction self-check fails (the
// report then carries the failed check).
Report construct(const Json& opts, AlgebraFile& out);

}  // namespace axial::capi
