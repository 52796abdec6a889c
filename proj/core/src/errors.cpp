// Copyright 2026 The qlcst Authors
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

#include "qlcst/errors.hpp"

#include <string>

namespace qlcst {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DeterminantError: return "DeterminantError";
    case ErrorKind::ZeroBError: return "ZeroBError";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::SpacingError: return "SpacingError";
    case ErrorKind::ZeroSignal: return "ZeroSignal";
    case ErrorKind::ZeroFrequency: return "ZeroFrequency";
    case ErrorKind::ZeroWindow: return "ZeroWindow";
    case ErrorKind::AdmissibilityError: return "AdmissibilityError";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::BadAxis: return "BadAxis";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::TruncatedFile: return "TruncatedFile";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace qlcst
