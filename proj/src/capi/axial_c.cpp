#include "axial/axial.h"

#include <chrono>
#include <cstdlib>
#include <cstring>

#include "commands.hpp"

struct axial_algebra {
  axial::AlgebraFile file;
};

namespace {

thread_local std::string lastError;
thread_local std::string lastKind;

void clearError() {
  lastError.clear();
  lastKind.clear();
}

int setError(const std::string& kind, const std::string& message, int status) {
  lastKind = kind;
  lastError = message;
  return status;
}

int statusFor(axial::ErrorCode code) {
  using axial::ErrorCode;
  switch (code) {
    case ErrorCode::OrbitOverflow:
    case ErrorCode::Inconsistent:
    case ErrorCode::SelfCheckFailed:
      return AXIAL_CHECK_FAILED;
    case ErrorCode::Io:
      return AXIAL_ERR_IO;
    default:
      return AXIAL_ERR_INPUT;
  }
}

// Runs f, translating exceptions into status codes.
template <class F>
int guarded(F&& f) {
  clearError();
  try {
    return f();
  } catch (const axial::Error& e) {
    return setError(axial::errorCodeName(e.code()), e.what(), statusFor(e.code()));
  } catch (const nlohmann::json::exception& e) {
    return setError("Schema", e.what(), AXIAL_ERR_INPUT);
  } catch (const std::bad_alloc&) {
    return setError("Internal", "out of memory", AXIAL_ERR_INTERNAL);
  } catch (const std::exception& e) {
    return setError("Internal", e.what(), AXIAL_ERR_INTERNAL);
  }
}

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

axial::Json parseOptions(const char* text) {
  if (!text || !*text) return axial::Json::object();
  try {
    return axial::Json::parse(text);
  } catch (const axial::Json::exception& e) {
    axial::fail(axial::ErrorCode::Schema, std::string("options are not valid JSON: ") + e.what());
  }
}

double millisSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

extern "C" {

const char* axial_version(void) { return "0.1.0"; }

const char* axial_last_error(void) { return lastError.c_str(); }

const char* axial_last_error_kind(void) { return lastKind.c_str(); }

void axial_string_free(char* s) { std::free(s); }

int axial_algebra_load(const char* path, axial_algebra** out) {
  return guarded([&] {
    if (!path || !out) axial::fail(axial::ErrorCode::InvalidArgument, "null argument");
    *out = nullptr;
    auto* a = new axial_algebra{axial::loadAlgebra(path)};
    *out = a;
    return AXIAL_OK;
  });
}

int axial_algebra_save(const axial_algebra* alg, const char* path) {
  return guarded([&] {
    if (!alg || !path) axial::fail(axial::ErrorCode::InvalidArgument, "null argument");
    axial::saveAlgebra(path, alg->file);
    return AXIAL_OK;
  });
}

int axial_algebra_from_json(const char* json, axial_algebra** out) {
  return guarded([&] {
    if (!json || !out) axial::fail(axial::ErrorCode::InvalidArgument, "null argument");
    *out = nullptr;
    axial::Json j;
    try {
      j = axial::Json::parse(json);
    } catch (const axial::Json::exception& e) {
      axial::fail(axial::ErrorCode::Schema, e.what());
    }
    *out = new axial_algebra{axial::algebraFromJson(j)};
    return AXIAL_OK;
  });
}

int axial_algebra_to_json(const axial_algebra* alg, char** out) {
  return guarded([&] {
    if (!alg || !out) axial::fail(axial::ErrorCode::InvalidArgument, "null argument");
    *out = copyString(axial::algebraToJson(alg->file).dump(2));
    return AXIAL_OK;
  });
}

void axial_algebra_free(axial_algebra* alg) { delete alg; }

size_t axial_algebra_dim(const axial_algebra* alg) { return alg ? alg->file.algebra->dim() : 0; }

int axial_construct(const char* options_json, axial_algebra** out, char** report) {
  return guarded([&] {
    if (!out) axial::fail(axial::ErrorCode::InvalidArgument, "null argument");
    *out = nullptr;
    if (report) *report = nullptr;
    auto t0 = std::chrono::steady_clock::now();
    axial::AlgebraFile file;
    axial::capi::Report r = axial::capi::construct(parseOptions(options_json), file);
    if (report) *report = copyString(r.toJson(millisSince(t0)).dump(2));
    if (!r.pass()) {
      setError("SelfCheckFailed", r.checks.back()["detail"].get<std::string>(), AXIAL_CHECK_FAILED);
      return AXIAL_CHECK_FAILED;
    }
    *out = new axial_algebra{std::move(file)};
    return AXIAL_OK;
  });
}

int axial_run(const char* command, const axial_algebra* alg, const char* options_json, char** report) {
  return guarded([&] {
    if (!command || !alg || !report) axial::fail(axial::ErrorCode::InvalidArgument, "null argument");
    *report = nullptr;
    auto t0 = std::chrono::steady_clock::now();
    axial::capi::Report r = axial::capi::runCommand(command, alg->file, parseOptions(options_json));
    *report = copyString(r.toJson(millisSince(t0)).dump(2));
    return r.pass() ? AXIAL_OK : AXIAL_CHECK_FAILED;
  });
}

}  // extern "C"
