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
#include <utility>
#include <vector>

#include "qlcst/errors.hpp"
#include "qlcst/lct_kernel.hpp"
#include "qlcst/quaternion.hpp"

namespace qlcst {

/// Uniform 1D sample grid: x_k = origin + k·spacing, k = 0..n-1.
struct Grid1D {
  std::size_t n = 0;
  double origin = 0.0;
  double spacing = 0.0;

  double at(std::size_t k) const noexcept { return origin + static_cast<double>(k) * spacing; }
  bool operator==(const Grid1D&) const = default;
};

struct Grid2D {
  Grid1D axis1;
  Grid1D axis2;

  std::size_t size() const noexcept { return axis1.n * axis2.n; }
  double cell() const noexcept { return axis1.spacing * axis2.spacing; }
  bool operator==(const Grid2D&) const = default;
};

/// n cell midpoints covering [-extent, extent]; for even n no sample lands on 0.
Grid1D midpoint_grid(std::size_t n, double extent);

/// Origin -extent, spacing 2·extent/n; for even n the sample n/2 is exactly 0.
Grid1D node_grid(std::size_t n, double extent);

inline Grid2D square(const Grid1D& g) { return {g, g}; }

/// The n-point canonical-frequency grid paired with x for the chirp–FFT path:
/// spacing 2π|B|/(n·Δx), symmetric about 0 with no sample at 0.
Grid1D spectral_grid(const Grid1D& x, const ParamMatrix& m);

/// Symmetric grid of n points with the given spacing; zero-free for even n.
Grid1D centered_grid(std::size_t n, double spacing);

/// True when du = 2π|B|/(n·dx) within a relative 1e-9 and both grids have the same length.
bool fft_compatible(const Grid1D& x, const Grid1D& u, const ParamMatrix& m) noexcept;

/// Throws GridMismatch for empty grids or non-positive spacing.
void check_grid(const Grid1D& g, const char* what);
void check_grid(const Grid2D& g, const char* what);

/// Quaternion samples on a uniform 2D grid, row-major with axis 2 fastest.
/// The tag keeps signals (indexed by x) and spectra (indexed by u or w) apart.
template <class Tag>
class QField2D {
 public:
  QField2D() = default;
  explicit QField2D(Grid2D grid) : grid_(grid), samples_(grid.size()) {}
  QField2D(Grid2D grid, std::vector<Quaternion> samples);

  const Grid2D& grid() const noexcept { return grid_; }
  std::size_t n1() const noexcept { return grid_.axis1.n; }
  std::size_t n2() const noexcept { return grid_.axis2.n; }

  Quaternion& at(std::size_t i1, std::size_t i2) { return samples_[i1 * grid_.axis2.n + i2]; }
  const Quaternion& at(std::size_t i1, std::size_t i2) const { return samples_[i1 * grid_.axis2.n + i2]; }

  std::vector<Quaternion>& samples() noexcept { return samples_; }
  const std::vector<Quaternion>& samples() const noexcept { return samples_; }

  /// ΣΣ |q|² Δ1 Δ2.
  double energy() const noexcept {
    double e = 0.0;
    for (const auto& q : samples_) e += norm2(q);
    return e * grid_.cell();
  }

 private:
  Grid2D grid_{};
  std::vector<Quaternion> samples_;
};

struct SignalTag {};
struct SpectrumTag {};

using QSignal2D = QField2D<SignalTag>;
using QSpectrum2D = QField2D<SpectrumTag>;

template <class Tag>
QField2D<Tag>::QField2D(Grid2D grid, std::vector<Quaternion> samples) : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) throw Error(ErrorKind::GridMismatch, "sample count does not match grid");
}

/// ‖a − b‖₂ / ‖b‖₂ over the raw samples (0 when both are zero). Grids must have equal shape.
double relative_l2(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b);

template <class Tag>
double relative_l2(const QField2D<Tag>& a, const QField2D<Tag>& b) {
  return relative_l2(a.samples(), b.samples());
}

}  // namespace qlcst
