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

#include "qlcst/grid.hpp"
#include "qlcst/lct_kernel.hpp"
#include "qlcst/stransform.hpp"
#include "qlcst/window.hpp"

namespace qlcst {

/// ψ(x) for x > 0 by upward recurrence to x ≥ 10 followed by the asymptotic series.
double digamma(double x);

/// ψ(1/2) − ln 2, the constant in the logarithmic inequality.
double digamma_constant();

/// ΣΣ x_s² |f(x)|² Δx for s ∈ {1, 2}.
double spatial_dispersion(const QSignal2D& f, int axis);

/// ΣΣΣΣ w_s² |S(u, w)|² Δu Δw.
double spectral_dispersion(const QLCSTCoefficients& c, int axis);

/// Both sides of the Heisenberg-type inequality
///   √(spectral_s) · √(spatial_s) ≥ (|B_s| √Λ_Ψ / 2) ‖f‖².
struct DispersionReport {
  int axis = 1;
  double spatial = 0.0;
  double spectral = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double eps_disc = 0.0;  // filled in by callers that run a refinement
};

/// Terms of ∬ ln|w| |S|² + Λ ∫ ln|x| |f|² ≥ 𝒟 Λ ‖f‖².
struct LogUncertaintyReport {
  double spectral_log = 0.0;
  double spatial_log = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  /// gap / (Λ‖f‖²); equals the gap of the unit-norm form when ‖f‖ = 1 after dividing by Λ.
  double normalized_gap = 0.0;
  double eps_disc = 0.0;
};

/// Grids used by the uncertainty reports: u = signal grid, w = default spectral grid.
/// The coefficients are streamed one u slice at a time, so memory stays O(N²).
DispersionReport heisenberg_report(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1,
                                   const ParamMatrix& m2, int axis);

/// Throws NonFinite if a grid sample sits exactly on x = 0 or w = 0.
LogUncertaintyReport log_uncertainty_report(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1,
                                            const ParamMatrix& m2);

/// |Λ ∫ x_s²|f|² − ∬ x_s² |L⁻¹{S(u, ·)}(x)|² dx du| / (Λ ∫ x_s²|f|²), the inverse QLCT taken per u.
/// Returns 0 when both sides vanish.
double lemma_41_gap(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1, const ParamMatrix& m2,
                    int axis);

}  // namespace qlcst
