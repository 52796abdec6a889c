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

#include "qlcst/uncertainty.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qlcst/errors.hpp"
#include "qlcst/parallel.hpp"
#include "qlcst/qlct.hpp"

namespace qlcst {

double digamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw Error(ErrorKind::BadParameter, "digamma needs a finite positive argument");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  // Bernoulli terms B_2k / (2k x^2k) for k = 1..7.
  const double series =
      r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
  return shift + std::log(x) - 0.5 / x - series;
}

double digamma_constant() { return digamma(0.5) - std::log(2.0); }

namespace {

void check_axis(int axis) {
  if (axis != 1 && axis != 2) throw Error(ErrorKind::BadAxis, "axis must be 1 or 2");
}

double coordinate(const Grid2D& g, std::size_t i1, std::size_t i2, int axis) {
  return axis == 1 ? g.axis1.at(i1) : g.axis2.at(i2);
}

// Per-u reductions are stored by index and summed in order afterwards, so results do not depend on
// the thread count.
template <class Fn>
double sum_over_u(const Grid2D& u, Fn&& per_slice) {
  std::vector<double> partial(u.size());
  parallel_for(u.size(), [&](std::size_t iu) { partial[iu] = per_slice(iu / u.axis2.n, iu % u.axis2.n); });
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

QSpectrum2D slice_at(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1, const ParamMatrix& m2,
                     const Grid2D& wgrid, std::size_t iu1, std::size_t iu2) {
  const Grid2D& u = f.grid();
  return qlcst_slice(f, window, m1, m2, u.axis1.at(iu1), u.axis2.at(iu2), wgrid);
}

double log_radius(double a, double b) {
  const double r = std::hypot(a, b);
  if (r == 0.0) throw Error(ErrorKind::NonFinite, "ln|x| evaluated at a sample on the origin");
  return std::log(r);
}

}  // namespace

double spatial_dispersion(const QSignal2D& f, int axis) {
  check_axis(axis);
  const Grid2D& g = f.grid();
  double acc = 0.0;
  for (std::size_t i1 = 0; i1 < g.axis1.n; ++i1) {
    for (std::size_t i2 = 0; i2 < g.axis2.n; ++i2) {
      const double x = coordinate(g, i1, i2, axis);
      acc += x * x * norm2(f.at(i1, i2));
    }
  }
  return acc * g.cell();
}

double spectral_dispersion(const QLCSTCoefficients& c, int axis) {
  check_axis(axis);
  const Grid2D& w = c.wgrid();
  const std::size_t nw = w.size();
  std::vector<double> weight(nw);
  for (std::size_t k = 0; k < nw; ++k) {
    const double ws = coordinate(w, k / w.axis2.n, k % w.axis2.n, axis);
    weight[k] = ws * ws;
  }
  return sum_over_u(c.ugrid(), [&](std::size_t iu1, std::size_t iu2) {
           const Quaternion* row = &c.data()[c.u_index(iu1, iu2) * nw];
           double acc = 0.0;
           for (std::size_t k = 0; k < nw; ++k) acc += weight[k] * norm2(row[k]);
           return acc;
         }) *
         c.ugrid().cell() * w.cell();
}

DispersionReport heisenberg_report(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1,
                                   const ParamMatrix& m2, int axis) {
  check_axis(axis);
  const double ef = f.energy();
  if (ef == 0.0) throw Error(ErrorKind::ZeroSignal, "Heisenberg report of the zero signal");
  const double lambda = lambda_constant(window);
  const Grid2D wgrid = default_spectral_grid(f.grid(), m1, m2);

  DispersionReport r;
  r.axis = axis;
  r.spatial = spatial_dispersion(f, axis);
  r.spectral = sum_over_u(f.grid(), [&](std::size_t iu1, std::size_t iu2) {
                 const QSpectrum2D s = slice_at(f, window, m1, m2, wgrid, iu1, iu2);
                 double acc = 0.0;
                 for (std::size_t j1 = 0; j1 < wgrid.axis1.n; ++j1) {
                   for (std::size_t j2 = 0; j2 < wgrid.axis2.n; ++j2) {
                     const double ws = coordinate(wgrid, j1, j2, axis);
                     acc += ws * ws * norm2(s.at(j1, j2));
                   }
                 }
                 return acc;
               }) *
               f.grid().cell() * wgrid.cell();
  const double b = axis == 1 ? m1.b() : m2.b();
  r.lhs = std::sqrt(r.spectral) * std::sqrt(r.spatial);
  r.rhs = std::abs(b) * std::sqrt(lambda) / 2.0 * ef;
  r.ratio = r.lhs / r.rhs;
  return r;
}

LogUncertaintyReport log_uncertainty_report(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1,
                                            const ParamMatrix& m2) {
  const double ef = f.energy();
  if (ef == 0.0) throw Error(ErrorKind::ZeroSignal, "log-uncertainty report of the zero signal");
  const double lambda = lambda_constant(window);
  const Grid2D& x = f.grid();
  const Grid2D wgrid = default_spectral_grid(x, m1, m2);

  std::vector<double> log_w(wgrid.size());
  for (std::size_t k = 0; k < log_w.size(); ++k) {
    log_w[k] = log_radius(wgrid.axis1.at(k / wgrid.axis2.n), wgrid.axis2.at(k % wgrid.axis2.n));
  }
  double spatial = 0.0;
  for (std::size_t i1 = 0; i1 < x.axis1.n; ++i1) {
    for (std::size_t i2 = 0; i2 < x.axis2.n; ++i2) {
      spatial += log_radius(x.axis1.at(i1), x.axis2.at(i2)) * norm2(f.at(i1, i2));
    }
  }

  LogUncertaintyReport r;
  r.spatial_log = lambda * spatial * x.cell();
  r.spectral_log = sum_over_u(x, [&](std::size_t iu1, std::size_t iu2) {
                     const QSpectrum2D s = slice_at(f, window, m1, m2, wgrid, iu1, iu2);
                     double acc = 0.0;
                     for (std::size_t k = 0; k < log_w.size(); ++k) acc += log_w[k] * norm2(s.samples()[k]);
                     return acc;
                   }) *
                   x.cell() * wgrid.cell();
  r.bound = digamma_constant() * lambda * ef;
  r.gap = r.spectral_log + r.spatial_log - r.bound;
  r.normalized_gap = r.gap / (lambda * ef);
  if (!std::isfinite(r.gap)) throw Error(ErrorKind::NonFinite, "log-uncertainty terms are not finite");
  return r;
}

double lemma_41_gap(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1, const ParamMatrix& m2,
                    int axis) {
  check_axis(axis);
  const double lambda = lambda_constant(window);
  const Grid2D& x = f.grid();
  const double lhs = lambda * spatial_dispersion(f, axis);
  const Grid2D wgrid = default_spectral_grid(x, m1, m2);
  const double rhs = sum_over_u(x, [&](std::size_t iu1, std::size_t iu2) {
                       const QSpectrum2D s = slice_at(f, window, m1, m2, wgrid, iu1, iu2);
                       return spatial_dispersion(qlct_auto_inverse(s, m1, m2, x), axis);
                     }) *
                     x.cell();
  if (lhs == 0.0 && rhs == 0.0) return 0.0;
  return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace qlcst
