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

// Chirp–FFT evaluation of one axis of the discrete LCT. Internal to the library.

#include <cstddef>

#include "qlcst/grid.hpp"
#include "qlcst/lct_kernel.hpp"
#include "qlcst/quaternion.hpp"

namespace qlcst::detail {

/// In-place transform of one axis of a row-major n1×n2 complex array (axis 2 contiguous).
/// Forward maps samples on xg to ug with kernel |2πB|^{-1/2} e^{iσ·phase(x,u)} Δx;
/// Inverse maps samples on ug to xg with |2πB|^{-1/2} e^{−iσ·phase(x,u)} Δu.
/// σ = ±1 selects the kernel or its conjugate. Grids must satisfy fft_compatible().
void chirp_lct_axis(Complex* data, std::size_t n1, std::size_t n2, int axis, const Grid1D& xg, const Grid1D& ug,
                    const ParamMatrix& m, int sigma, Direction direction);

}  // namespace qlcst::detail
