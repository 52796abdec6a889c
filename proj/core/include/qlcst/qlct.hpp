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

namespace qlcst {

/// Two-sided QLCT by direct Riemann sum:
///   F(u) = ΣΣ K^{μ1}_{M1}(x1,u1) · f(x) · K^{μ2}_{M2}(x2,u2) Δx1Δx2
/// with the left kernel multiplied on the left and the right kernel on the right.
/// O(N⁴) for an N×N signal and spectrum; parallel over output points only.
QSpectrum2D qlct_forward(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2, const Grid2D& ugrid);

/// Inverse QLCT by direct Riemann sum over u with the conjugate kernels on the same sides.
QSignal2D qlct_inverse(const QSpectrum2D& spectrum, const ParamMatrix& m1, const ParamMatrix& m2,
                       const Grid2D& xgrid);

/// Chirp–FFT evaluation of the same Riemann sum. Requires fft_compatible() on both axes
/// (throws SpacingError otherwise). O(N² log N).
QSpectrum2D qlct_fast_forward(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2, const Grid2D& ugrid);

QSignal2D qlct_fast_inverse(const QSpectrum2D& spectrum, const ParamMatrix& m1, const ParamMatrix& m2,
                            const Grid2D& xgrid);

/// The same Riemann sum factored axis by axis, O(N³); works on any grids.
QSpectrum2D qlct_separable_forward(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2,
                                   const Grid2D& ugrid);
QSignal2D qlct_separable_inverse(const QSpectrum2D& spectrum, const ParamMatrix& m1, const ParamMatrix& m2,
                                 const Grid2D& xgrid);

/// Fast path when both axes are FFT-compatible, separable otherwise.
QSpectrum2D qlct_auto_forward(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2, const Grid2D& ugrid);
QSignal2D qlct_auto_inverse(const QSpectrum2D& spectrum, const ParamMatrix& m1, const ParamMatrix& m2,
                            const Grid2D& xgrid);

/// Default spectrum grid for f: spectral_grid() per axis.
Grid2D default_spectral_grid(const Grid2D& xgrid, const ParamMatrix& m1, const ParamMatrix& m2);

/// |energy(f) − energy(QLCT f)| / energy(f) on the default spectral grid. Throws ZeroSignal.
double plancherel_gap(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2);

}  // namespace qlcst
