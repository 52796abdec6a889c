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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "qlcst/grid.hpp"
#include "qlcst/quaternion.hpp"

namespace qlcst {

/// (1/(2πσ1σ2))·exp(−x1²/(2σ1²) − x2²/(2σ2²)); independent of w.
struct FixedGaussian {
  double sigma1 = 1.0;
  double sigma2 = 1.0;
};

/// Frequency-adaptive Stockwell window (|w1w2|/(2π))·exp(−(x1²w1² + x2²w2²)/2).
struct SGaussian {};

/// Quaternion-valued window sampled on a grid, bilinearly interpolated, zero outside the grid.
struct TableWindow {
  QSignal2D table;
  std::string source;  // path it was read from, if any
};

/// Γ(w): real and independent of x. Not square integrable over x, so it has no admissibility
/// constant; used for the multiplication-operator reduction.
struct FrequencyOnlyWindow {
  std::function<double(double, double)> gamma;
  std::string name = "frequency-only";
};

/// Ψ ≡ value. Independent of both x and w.
struct ConstantWindow {
  double value = 1.0;
};

/// A window that can be fed to the S-transform. The reflected flag evaluates Ψ(−x, w).
class WindowSpec {
 public:
  using Family = std::variant<FixedGaussian, SGaussian, TableWindow, FrequencyOnlyWindow, ConstantWindow>;

  WindowSpec(Family family) : family_(std::move(family)) {}  // NOLINT(google-explicit-constructor)

  static WindowSpec fixed_gaussian(double sigma1, double sigma2);
  static WindowSpec s_gaussian() { return WindowSpec(SGaussian{}); }
  static WindowSpec constant(double value);

  /// "fixed-gauss:σ1,σ2" | "s-gauss" | "table:PATH" | "constant:VALUE", optionally prefixed by "reflect:".
  static WindowSpec parse(std::string_view text);

  const Family& family() const noexcept { return family_; }
  bool reflected() const noexcept { return reflected_; }

  /// PΨ(x, w) = Ψ(−x, w).
  WindowSpec reflect() const;

  /// Ψ(x, w). Throws ZeroFrequency for the S-window at w_s = 0.
  Quaternion eval(double x1, double x2, double w1, double w2) const;

  bool depends_on_w() const noexcept;
  bool depends_on_x() const noexcept;
  bool is_real() const noexcept;

  /// Real product factors g1(x1, w1)·g2(x2, w2) when the window separates that way.
  struct Factors {
    std::function<double(double, double)> axis1;
    std::function<double(double, double)> axis2;
  };
  std::optional<Factors> separable_factors() const;

  /// Text form accepted by parse(); empty for in-memory-only families.
  std::string describe() const;

 private:
  Family family_;
  bool reflected_ = false;
};

Quaternion window_eval(const WindowSpec& spec, double x1, double x2, double w1, double w2);

struct Admissibility {
  double lambda = 0.0;
  bool w_dependent = false;
};

/// Λ_Ψ(w) = ∫|Ψ(u, w)|² du by Riemann sum. Analytic families use a grid fine and wide enough
/// that the sum is exact to rounding; tables sum over their own samples.
/// Throws ZeroWindow if the window vanishes on the quadrature grid, AdmissibilityError when it is
/// not square integrable.
Admissibility lambda_psi(const WindowSpec& spec, double w1, double w2);

/// Λ_Ψ for windows whose admissibility does not depend on w; AdmissibilityError otherwise.
double lambda_constant(const WindowSpec& spec);

}  // namespace qlcst
