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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>

#include "qlcst/grid.hpp"
#include "qlcst/stransform.hpp"

namespace qlcst {

inline constexpr std::uint16_t kFormatVersion = 1;

/// QSG1 (signals and 2D spectra), little-endian, no padding:
///   "QSG1" | u16 version | u32 n1 | u32 n2 | f64 origin1 | f64 origin2 | f64 d1 | f64 d2 |
///   n1·n2 × (f64 w, f64 x, f64 y, f64 z), row-major with axis 2 fastest.
void write_signal(const std::filesystem::path& path, const QSignal2D& f);
QSignal2D read_signal(const std::filesystem::path& path);

/// QCF1 (S-transform coefficients):
///   "QCF1" | u16 version | u32 nu1 | u32 nu2 | f64 u-origin1 | f64 u-origin2 | f64 du1 | f64 du2 |
///   u32 nw1 | u32 nw2 | f64 w-origin1 | f64 w-origin2 | f64 dw1 | f64 dw2 |
///   f64 A1 B1 C1 D1 | f64 A2 B2 C2 D2 | u16 window-length | window text (parse() syntax) |
///   nu1·nu2·nw1·nw2 quaternions ordered (u1, u2, w1, w2), w2 fastest.
void write_coefficients(const std::filesystem::path& path, const QLCSTCoefficients& c);
QLCSTCoefficients read_coefficients(const std::filesystem::path& path);

/// Reads the magic and dispatches.
std::variant<QSignal2D, QLCSTCoefficients> read_any(const std::filesystem::path& path);

}  // namespace qlcst
