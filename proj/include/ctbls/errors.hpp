// Copyright 2026 The ctbls Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ctbls {

// Caller passed something the API does not accept: out-of-range integers,
// mismatched lengths, unsupported word sizes.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request, e.g. inverting zero or using a point
// that is not on the curve.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class DecodeErrorKind { kMalformed, kNotOnCurve, kNotInSubgroup };

inline const char* to_string(DecodeErrorKind kind) {
  switch (kind) {
    case DecodeErrorKind::kMalformed:
      return "malformed";
    case DecodeErrorKind::kNotOnCurve:
      return "not-on-curve";
    case DecodeErrorKind::kNotInSubgroup:
      return "not-in-subgroup";
  }
  return "unknown";
}

class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  DecodeErrorKind kind() const noexcept { return kind_; }

 private:
  DecodeErrorKind kind_;
};

}  // namespace ctbls
