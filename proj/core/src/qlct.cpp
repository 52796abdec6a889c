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

#include "qlcst/qlct.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "chirp_fft.hpp"
#include "qlcst/errors.hpp"
#include "qlcst/parallel.hpp"

namespace qlcst {

namespace {

// kernel[i * nu + j] = K(x_i, u_j) for one axis, as a quaternion on that axis.
std::vector<Quaternion> kernel_table(const Grid1D& x, const Grid1D& u, const ParamMatrix& m, Axis axis,
                                     Direction direction) {
  std::vector<Quaternion> table(x.n * u.n);
  const KernelSpec spec{m, axis, direction};
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t j = 0; j < u.n; ++j) table[i * u.n + j] = kernel_eval(spec, x.at(i), u.at(j));
  }
  return table;
}

template <class In, class Out>
Out direct_two_sided(const In& in, const Grid2D& in_grid, const Grid2D& out_grid, const std::vector<Quaternion>& left,
                     const std::vector<Quaternion>& right, bool in_is_spatial) {
  Out out(out_grid);
  const std::size_t n1 = in_grid.axis1.n;
  const std::size_t n2 = in_grid.axis2.n;
  const std::size_t m1 = out_grid.axis1.n;
  const std::size_t m2 = out_grid.axis2.n;
  const double cell = in_grid.cell();
  // Tables are indexed (spatial, spectral); pick the right stride for each direction.
  auto left_at = [&](std::size_t i, std::size_t j) -> const Quaternion& {
    return in_is_spatial ? left[i * m1 + j] : left[j * n1 + i];
  };
  auto right_at = [&](std::size_t i, std::size_t j) -> const Quaternion& {
    return in_is_spatial ? right[i * m2 + j] : right[j * n2 + i];
  };
  parallel_for(m1 * m2, [&](std::size_t idx) {
    const std::size_t j1 = idx / m2;
    const std::size_t j2 = idx % m2;
    Quaternion acc;
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      const Quaternion& kl = left_at(i1, j1);
      for (std::size_t i2 = 0; i2 < n2; ++i2) {
        const Quaternion t = kl * in.at(i1, i2);
        acc += t * right_at(i2, j2);
      }
    }
    out.at(j1, j2) = acc * cell;
  });
  return out;
}

template <class In, class Out>
Out separable_two_sided(const In& in, const Grid2D& in_grid, const Grid2D& out_grid,
                        const std::vector<Quaternion>& left, const std::vector<Quaternion>& right,
                        bool in_is_spatial) {
  const std::size_t n1 = in_grid.axis1.n;
  const std::size_t n2 = in_grid.axis2.n;
  const std::size_t m1 = out_grid.axis1.n;
  const std::size_t m2 = out_grid.axis2.n;
  auto left_at = [&](std::size_t i, std::size_t j) -> const Quaternion& {
    return in_is_spatial ? left[i * m1 + j] : left[j * n1 + i];
  };
  auto right_at = [&](std::size_t i, std::size_t j) -> const Quaternion& {
    return in_is_spatial ? right[i * m2 + j] : right[j * n2 + i];
  };
  // t(j1, i2) = Σ_i1 K_left(i1, j1) · in(i1, i2) Δ1
  std::vector<Quaternion> t(m1 * n2);
  parallel_for(m1, [&](std::size_t j1) {
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      Quaternion acc;
      for (std::size_t i1 = 0; i1 < n1; ++i1) acc += left_at(i1, j1) * in.at(i1, i2);
      t[j1 * n2 + i2] = acc * in_grid.axis1.spacing;
    }
  });
  Out out(out_grid);
  parallel_for(m1, [&](std::size_t j1) {
    for (std::size_t j2 = 0; j2 < m2; ++j2) {
      Quaternion acc;
      for (std::size_t i2 = 0; i2 < n2; ++i2) acc += t[j1 * n2 + i2] * right_at(i2, j2);
      out.at(j1, j2) = acc * in_grid.axis2.spacing;
    }
  });
  return out;
}

void require_fft(const Grid1D& x, const Grid1D& u, const ParamMatrix& m, int axis) {
  if (!fft_compatible(x, u, m)) {
    throw Error(ErrorKind::SpacingError, "axis " + std::to_string(axis) +
                                             ": spectral spacing must equal 2*pi*|B|/(N*dx) with equal lengths");
  }
}

// p = a + μ1·b and m = a − μ1·b for q = a + b·μ2 diagonalize right multiplication by e^{μ2θ}:
// p ↦ p·e^{iθ}, m ↦ m·e^{−iθ}. Left multiplication by μ1-complex numbers acts on both unchanged.
template <class Out, class In>
Out fast_two_sided(const In& in, const Grid2D& in_grid, const Grid2D& out_grid, const Grid2D& xgrid,
                   const Grid2D& ugrid, const ParamMatrix& m1, const ParamMatrix& m2, Direction direction) {
  const std::size_t n1 = in_grid.axis1.n;
  const std::size_t n2 = in_grid.axis2.n;
  const Complex i(0.0, 1.0);
  std::vector<Complex> p(n1 * n2);
  std::vector<Complex> q(n1 * n2);
  for (std::size_t k = 0; k < n1 * n2; ++k) {
    const SymplecticPair sp = symplectic_split(in.samples()[k]);
    p[k] = sp.a + i * sp.b;
    q[k] = sp.a - i * sp.b;
  }
  detail::chirp_lct_axis(p.data(), n1, n2, 1, xgrid.axis1, ugrid.axis1, m1, +1, direction);
  detail::chirp_lct_axis(q.data(), n1, n2, 1, xgrid.axis1, ugrid.axis1, m1, +1, direction);
  detail::chirp_lct_axis(p.data(), n1, n2, 2, xgrid.axis2, ugrid.axis2, m2, +1, direction);
  detail::chirp_lct_axis(q.data(), n1, n2, 2, xgrid.axis2, ugrid.axis2, m2, -1, direction);
  Out out(out_grid);
  for (std::size_t k = 0; k < n1 * n2; ++k) {
    const Complex a = 0.5 * (p[k] + q[k]);
    const Complex b = -0.5 * i * (p[k] - q[k]);
    out.samples()[k] = symplectic_join({a, b});
  }
  return out;
}

}  // namespace

QSpectrum2D qlct_forward(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2, const Grid2D& ugrid) {
  check_grid(ugrid, "spectrum grid");
  const auto left = kernel_table(f.grid().axis1, ugrid.axis1, m1, Axis::Mu1, Direction::Forward);
  const auto right = kernel_table(f.grid().axis2, ugrid.axis2, m2, Axis::Mu2, Direction::Forward);
  return direct_two_sided<QSignal2D, QSpectrum2D>(f, f.grid(), ugrid, left, right, true);
}

QSignal2D qlct_inverse(const QSpectrum2D& spectrum, const ParamMatrix& m1, const ParamMatrix& m2,
                       const Grid2D& xgrid) {
  check_grid(xgrid, "signal grid");
  const auto left = kernel_table(xgrid.axis1, spectrum.grid().axis1, m1, Axis::Mu1, Direction::Inverse);
  const auto right = kernel_table(xgrid.axis2, spectrum.grid().axis2, m2, Axis::Mu2, Direction::Inverse);
  return direct_two_sided<QSpectrum2D, QSignal2D>(spectrum, spectrum.grid(), xgrid, left, right, false);
}

QSpectrum2D qlct_separable_forward(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2,
                                   const Grid2D& ugrid) {
  check_grid(ugrid, "spectrum grid");
  const auto left = kernel_table(f.grid().axis1, ugrid.axis1, m1, Axis::Mu1, Direction::Forward);
  const auto right = kernel_table(f.grid().axis2, ugrid.axis2, m2, Axis::Mu2, Direction::Forward);
  return separable_two_sided<QSignal2D, QSpectrum2D>(f, f.grid(), ugrid, left, right, true);
}

QSignal2D qlct_separable_inverse(const QSpectrum2D& spectrum, const ParamMatrix& m1, const ParamMatrix& m2,
                                 const Grid2D& xgrid) {
  check_grid(xgrid, "signal grid");
  const auto left = kernel_table(xgrid.axis1, spectrum.grid().axis1, m1, Axis::Mu1, Direction::Inverse);
  const auto right = kernel_table(xgrid.axis2, spectrum.grid().axis2, m2, Axis::Mu2, Direction::Inverse);
  return separable_two_sided<QSpectrum2D, QSignal2D>(spectrum, spectrum.grid(), xgrid, left, right, false);
}

QSpectrum2D qlct_fast_forward(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2, const Grid2D& ugrid) {
  check_grid(ugrid, "spectrum grid");
  require_fft(f.grid().axis1, ugrid.axis1, m1, 1);
  require_fft(f.grid().axis2, ugrid.axis2, m2, 2);
  return fast_two_sided<QSpectrum2D>(f, f.grid(), ugrid, f.grid(), ugrid, m1, m2, Direction::Forward);
}

QSignal2D qlct_fast_inverse(const QSpectrum2D& spectrum, const ParamMatrix& m1, const ParamMatrix& m2,
                            const Grid2D& xgrid) {
  check_grid(xgrid, "signal grid");
  require_fft(xgrid.axis1, spectrum.grid().axis1, m1, 1);
  require_fft(xgrid.axis2, spectrum.grid().axis2, m2, 2);
  return fast_two_sided<QSignal2D>(spectrum, spectrum.grid(), xgrid, xgrid, spectrum.grid(), m1, m2,
                                   Direction::Inverse);
}

QSpectrum2D qlct_auto_forward(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2, const Grid2D& ugrid) {
  if (fft_compatible(f.grid().axis1, ugrid.axis1, m1) && fft_compatible(f.grid().axis2, ugrid.axis2, m2)) {
    return qlct_fast_forward(f, m1, m2, ugrid);
  }
  return qlct_separable_forward(f, m1, m2, ugrid);
}

QSignal2D qlct_auto_inverse(const QSpectrum2D& spectrum, const ParamMatrix& m1, const ParamMatrix& m2,
                            const Grid2D& xgrid) {
  if (fft_compatible(xgrid.axis1, spectrum.grid().axis1, m1) && fft_compatible(xgrid.axis2, spectrum.grid().axis2, m2)) {
    return qlct_fast_inverse(spectrum, m1, m2, xgrid);
  }
  return qlct_separable_inverse(spectrum, m1, m2, xgrid);
}

Grid2D default_spectral_grid(const Grid2D& xgrid, const ParamMatrix& m1, const ParamMatrix& m2) {
  return {spectral_grid(xgrid.axis1, m1), spectral_grid(xgrid.axis2, m2)};
}

double plancherel_gap(const QSignal2D& f, const ParamMatrix& m1, const ParamMatrix& m2) {
  const double ef = f.energy();
  if (ef == 0.0) throw Error(ErrorKind::ZeroSignal, "Plancherel gap of the zero signal");
  const QSpectrum2D spectrum = qlct_auto_forward(f, m1, m2, default_spectral_grid(f.grid(), m1, m2));
  return std::abs(ef - spectrum.energy()) / ef;
}

}  // namespace qlcst
