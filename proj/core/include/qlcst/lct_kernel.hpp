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

#include <optional>
#include <string>
#include <string_view>

#include "qlcst/quaternion.hpp"

namespace qlcst {

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance on |AD − BC − 1| and on |B|.
inline constexpr double kParamTolerance = 1e-12;

/// Unimodular LCT parameter matrix (A, B; C, D) with B ≠ 0.
/// Only constructible through validate(), so every instance satisfies both invariants.
class ParamMatrix {
 public:
  /// Throws DeterminantError or ZeroBError.
  static ParamMatrix validate(double a, double b, double c, double d, std::optional<std::string> label = {});

  /// Parses "A,B,C,D" (comma-separated decimals, C locale) and validates.
  static ParamMatrix parse(std::string_view text);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  const std::optional<std::string>& label() const noexcept { return label_; }

  /// "A,B,C,D" with round-trip precision.
  std::string to_string() const;

  bool same_parameters(const ParamMatrix& o) const noexcept {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }

 private:
  ParamMatrix(double a, double b, double c, double d, std::optional<std::string> label)
      : a_(a), b_(b), c_(c), d_(d), label_(std::move(label)) {}

  double a_, b_, c_, d_;
  std::optional<std::string> label_;
};

enum class Direction { Forward, Inverse };

struct KernelSpec {
  ParamMatrix m;
  Axis axis;
  Direction direction = Direction::Forward;
};

/// Real phase A x²/(2B) − x u/B + D u²/(2B) − π/4 of the forward kernel.
double kernel_phase(const ParamMatrix& m, double x, double u) noexcept;

/// 1/√(2π|B|).
double kernel_magnitude(const ParamMatrix& m) noexcept;

/// Forward: K^μ(x, u) = |2πB|^{-1/2} e^{μ·phase(x, u)}.
/// Inverse: the kernel of the inversion integral, i.e. the conjugate e^{−μ·phase(x, u)} with the same
/// magnitude. x is always the spatial argument and u the canonical-frequency argument.
Quaternion kernel_eval(const KernelSpec& spec, double x, double u);

}  // namespace qlcst
