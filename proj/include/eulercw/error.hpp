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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eulercw {

enum class ErrorCode {
  // malformed input
  ParseError,
  DuplicateId,
  DanglingReference,
  BadDimension,
  NonRegularEdge,
  EmptyBoundary,
  BadParameters,
  RankOutOfRange,
  EmptyFacetSet,
  NotAFacet,
  UnknownFacet,
  GluingMismatch,
  // structural preconditions that a well-formed complex may fail
  ZeroDimensional,
  NotPure,
  NotEven,
  NotCirclet,
  NotStronglyConnected,
  NoSharedSide,
  NotFacetDisjoint,
  InvalidCover,
  NotPseudomanifold,
  DualNotSimple,
  OddFacet,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that describe bad input rather than a failed analysis.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eulercw
