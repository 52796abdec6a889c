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

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "qlcst/grid.hpp"
#include "qlcst/lct_kernel.hpp"
#include "qlcst/window.hpp"

namespace qlcst {

/// Coefficients S(u, w) on a (u1, u2, w1, w2) grid, w2 fastest.
class QLCSTCoefficients {
 public:
  QLCSTCoefficients(Grid2D ugrid, Grid2D wgrid, WindowSpec window, ParamMatrix m1, ParamMatrix m2);

  const Grid2D& ugrid() const noexcept { return ugrid_; }
  const Grid2D& wgrid() const noexcept { return wgrid_; }
  const WindowSpec& window() const noexcept { return window_; }
  const ParamMatrix& m1() const noexcept { return m1_; }
  const ParamMatrix& m2() const noexcept { return m2_; }

  std::size_t u_index(std::size_t iu1, std::size_t iu2) const noexcept { return iu1 * ugrid_.axis2.n + iu2; }

  Quaternion& at(std::size_t iu1, std::size_t iu2, std::size_t iw1, std::size_t iw2) {
    return data_[(u_index(iu1, iu2) * wgrid_.axis1.n + iw1) * wgrid_.axis2.n + iw2];
  }
  const Quaternion& at(std::size_t iu1, std::size_t iu2, std::size_t iw1, std::size_t iw2) const {
    return data_[(u_index(iu1, iu2) * wgrid_.axis1.n + iw1) * wgrid_.axis2.n + iw2];
  }

  /// S(u, ·) as a spectrum on the w grid.
  QSpectrum2D slice(std::size_t iu1, std::size_t iu2) const;
  void set_slice(std::size_t iu1, std::size_t iu2, const QSpectrum2D& s);

  std::vector<Quaternion>& data() noexcept { return data_; }
  const std::vector<Quaternion>& data() const noexcept { return data_; }

  /// ΣΣ |S|² Δu Δw.
  double energy() const noexcept;

  bool same_layout(const QLCSTCoefficients& o) const noexcept;

 private:
  Grid2D ugrid_;
  Grid2D wgrid_;
  WindowSpec window_;
  ParamMatrix m1_;
  ParamMatrix m2_;
  std::vector<Quaternion> data_;
};

/// Evaluation strategy for the S-transform; all of them compute the same Riemann sum.
enum class QlcstMethod {
  Auto,      // fastest applicable
  Direct,    // per (u, w) double sum over x, O(N⁶)
  Slice,     // per u: QLCT of f·conj(Ψ(u − ·)); w-independent windows only
  Separable  // real product windows, O(N⁵)
};

/// S(u, w) = ΣΣ K^{μ1}_{M1}(x1,w1) · f(x) · conj(Ψ(u − x, w)) · K^{μ2}_{M2}(x2,w2) Δx1Δx2.
QLCSTCoefficients qlcst_forward(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1,
                                const ParamMatrix& m2, const Grid2D& ugrid, const Grid2D& wgrid,
                                QlcstMethod method = QlcstMethod::Auto);

/// Defaults: u grid = signal grid, w grid = default_spectral_grid().
QLCSTCoefficients qlcst_forward(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1,
                                const ParamMatrix& m2);

/// S(u, ·) for a single position u; w-independent windows only.
QSpectrum2D qlcst_slice(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1, const ParamMatrix& m2,
                        double u1, double u2, const Grid2D& wgrid);

/// Inverse QLCT over w at a fixed u: recovers f(x)·conj(Ψ(u − x, w)) on xgrid.
QSignal2D qlcst_pointwise_inverse(const QLCSTCoefficients& c, std::size_t iu1, std::size_t iu2, const Grid2D& xgrid);

/// f(x) = (1/Λ_Ψ) ΣΣ K^{−μ1}(x1,w1) · S(u,w) · Ψ(u − x, w) · K^{−μ2}(x2,w2) Δw Δu.
/// Throws AdmissibilityError if Λ_Ψ depends on w.
QSignal2D qlcst_reconstruct(const QLCSTCoefficients& c, const Grid2D& xgrid);
QSignal2D qlcst_reconstruct(const QLCSTCoefficients& c);  // xgrid = ugrid

/// ΣΣ S_f · conj(S_g) Δw Δu. Throws GridMismatch unless both share grids, window and matrices.
Quaternion orthogonality_form(const QLCSTCoefficients& cf, const QLCSTCoefficients& cg);

/// |ΣΣ|S|² − Λ‖f‖²| / (Λ‖f‖²). Throws ZeroSignal.
double energy_identity_gap(const QLCSTCoefficients& c, const QSignal2D& f);

/// ‖Σ_u S(u, ·)Δu − QLCT[f]‖ / ‖QLCT[f]‖ on the w grid (0 when both vanish).
double marginal_qlct_gap(const QLCSTCoefficients& c, const QSignal2D& f, const ParamMatrix& m1,
                         const ParamMatrix& m2);

struct CovarianceReport {
  double parity = 0.0;
  double shift = 0.0;
  /// Kernels on the right-hand side written K(w − sB, x) (first argument in the spatial slot).
  double modulation_swapped = 0.0;
  /// Kernels written K(x, w − sB).
  double modulation_ordered = 0.0;
};

/// Evaluates both sides of the parity, shift and modulation identities by quadrature on
/// symmetric grids and returns relative L² residuals. The translated signal is sampled from the
/// supplied function.
CovarianceReport covariance_residuals(const std::function<Quaternion(double, double)>& f, const Grid2D& xgrid,
                                      const WindowSpec& window, const ParamMatrix& m1, const ParamMatrix& m2,
                                      std::pair<double, double> shift, std::pair<double, double> modulation);

struct SpecialCase {
  enum class Kind { Fractional, Fresnel, Stockwell };
  Kind kind = Kind::Stockwell;
  double parameter = 0.0;  // θ for Fractional, B for Fresnel
};

/// Fractional(θ): (cos θ, sin θ, −sin θ, cos θ), θ ≠ nπ (DegenerateAngle).
/// Fresnel(B): (1, B, 0, 1). Stockwell: (0, 1, −1, 0). The same matrix is used on both axes.
std::pair<ParamMatrix, ParamMatrix> special_case_matrix(const SpecialCase& kind);

}  // namespace qlcst
