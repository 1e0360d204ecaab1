/*
Copyright 2026 The eulercw Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "eulercw/eulercw.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "eulercw/complex.hpp"
#include "eulercw/euler_cover.hpp"
#include "eulercw/generators.hpp"
#include "eulercw/gf2_matroid.hpp"
#include "eulercw/serialization.hpp"

struct ecw_complex {
  eulercw::Complex value;
};

namespace {

thread_local std::string last_name;
thread_local std::string last_message;

void clear_error() {
  last_name.clear();
  last_message.clear();
}

ecw_status record(std::string name, std::string message, ecw_status status) {
  last_name = std::move(name);
  last_message = std::move(message);
  return status;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into a status and the thread's last
// error. Errors from eulercw keep their name.
template <typename F>
ecw_status guarded(F&& body) {
  clear_error();
  try {
    return body();
  } catch (const eulercw::Error& e) {
    return record(std::string(eulercw::error_name(e.code())), e.what(),
                  eulercw::is_input_error(e.code()) ? ECW_INPUT_ERROR : ECW_CHECK_FAILED);
  } catch (const std::bad_alloc&) {
    return record("OutOfMemory", "allocation failed", ECW_INTERNAL_ERROR);
  } catch (const std::exception& e) {
    return record("InternalError", e.what(), ECW_INTERNAL_ERROR);
  } catch (...) {
    return record("InternalError", "unknown exception", ECW_INTERNAL_ERROR);
  }
}

ecw_status null_argument() {
  return record("InvalidArgument", "null argument", ECW_INPUT_ERROR);
}

ecw_status emit(char** out, const std::string& text, ecw_status status = ECW_OK) {
  *out = duplicate(text);
  return status;
}

ecw_status emit_report(char** out, const eulercw::ValidationReport& report) {
  if (report.passed()) return emit(out, eulercw::report_to_json(report));
  const auto& first = report.violations.front();
  record("CheckFailed", first.rule + ": " + first.message, ECW_CHECK_FAILED);
  return emit(out, eulercw::report_to_json(report), ECW_CHECK_FAILED);
}

}  // namespace

extern "C" {

const char* ecw_version(void) { return "1.0.0"; }

const char* ecw_last_error_name(void) { return last_name.c_str(); }

const char* ecw_last_error_message(void) { return last_message.c_str(); }

void ecw_string_free(char* s) { std::free(s); }

ecw_status ecw_complex_parse(const char* json, ecw_complex** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    *out = new ecw_complex{eulercw::complex_from_json(json)};
    return ECW_OK;
  });
}

ecw_status ecw_complex_generate(const char* family, const long long* params,
                                size_t param_count, ecw_complex** out) {
  if (!family || !out || (param_count > 0 && !params)) return null_argument();
  return guarded([&] {
    std::vector<long long> args(params, params + param_count);
    *out = new ecw_complex{eulercw::generate(eulercw::family_from_args(family, args))};
    return ECW_OK;
  });
}

void ecw_complex_free(ecw_complex* complex) { delete complex; }

int ecw_complex_dimension(const ecw_complex* complex) {
  return complex ? complex->value.dimension() : -1;
}

size_t ecw_complex_cell_count(const ecw_complex* complex, int r) {
  return complex ? complex->value.cells_of_dim(r).size() : 0;
}

ecw_status ecw_complex_to_json(const ecw_complex* complex, char** out) {
  if (!complex || !out) return null_argument();
  return guarded([&] { return emit(out, eulercw::complex_to_json(complex->value)); });
}

ecw_status ecw_validate(const ecw_complex* complex, char** out) {
  if (!complex || !out) return null_argument();
  return guarded([&] { return emit_report(out, eulercw::validate_regularity(complex->value)); });
}

ecw_status ecw_analyze(const ecw_complex* complex, char** out) {
  if (!complex || !out) return null_argument();
  return guarded([&] { return emit(out, eulercw::analysis_to_json(complex->value)); });
}

ecw_status ecw_decompose(const ecw_complex* complex, char** out) {
  if (!complex || !out) return null_argument();
  return guarded([&] {
    return emit(out, eulercw::decomposition_to_json(eulercw::decompose_into_circlets(complex->value)));
  });
}

ecw_status ecw_verify_decomposition(const ecw_complex* complex, const char* decomposition_json,
                                    char** out) {
  if (!complex || !decomposition_json || !out) return null_argument();
  return guarded([&] {
    const auto d = eulercw::decomposition_from_json(decomposition_json);
    return emit_report(out, eulercw::validate_decomposition(complex->value, d));
  });
}

ecw_status ecw_cover(const ecw_complex* complex, ecw_strategy strategy, uint64_t seed, char** out) {
  if (!complex || !out) return null_argument();
  return guarded([&] {
    const auto s = strategy == ECW_STRATEGY_SEEDED ? eulercw::Strategy::seeded(seed)
                                                   : eulercw::Strategy::canonical();
    return emit(out, eulercw::cover_to_json(eulercw::euler_cover(complex->value, s)));
  });
}

ecw_status ecw_verify_cover(const char* cover_json, char** out) {
  if (!cover_json || !out) return null_argument();
  return guarded([&] {
    return emit_report(out, eulercw::verify_cover(eulercw::cover_from_json(cover_json)));
  });
}

ecw_status ecw_side_tour(const ecw_complex* complex, char** out) {
  if (!complex || !out) return null_argument();
  return guarded([&] { return emit(out, eulercw::tour_to_json(eulercw::side_tour(complex->value))); });
}

ecw_status ecw_export_dual(const ecw_complex* complex, char** out) {
  if (!complex || !out) return null_argument();
  return guarded([&] { return emit(out, eulercw::dual_to_dot(complex->value)); });
}

}  // extern "C"
