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

#include "qlcst/grid.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qlcst {

Grid1D midpoint_grid(std::size_t n, double extent) {
  const double h = 2.0 * extent / static_cast<double>(n);
  return {n, -extent + 0.5 * h, h};
}

Grid1D node_grid(std::size_t n, double extent) { return {n, -extent, 2.0 * extent / static_cast<double>(n)}; }

Grid1D centered_grid(std::size_t n, double spacing) {
  return {n, -0.5 * (static_cast<double>(n) - 1.0) * spacing, spacing};
}

Grid1D spectral_grid(const Grid1D& x, const ParamMatrix& m) {
  check_grid(x, "signal grid");
  const double du = 2.0 * kPi * std::abs(m.b()) / (static_cast<double>(x.n) * x.spacing);
  return centered_grid(x.n, du);
}

bool fft_compatible(const Grid1D& x, const Grid1D& u, const ParamMatrix& m) noexcept {
  if (x.n != u.n || x.n == 0 || x.spacing <= 0.0 || u.spacing <= 0.0) return false;
  const double expected = 2.0 * kPi * std::abs(m.b()) / (static_cast<double>(x.n) * x.spacing);
  return std::abs(u.spacing / expected - 1.0) <= 1e-9;
}

void check_grid(const Grid1D& g, const char* what) {
  if (g.n == 0) throw Error(ErrorKind::GridMismatch, std::string(what) + " is empty");
  if (!(g.spacing > 0.0) || !std::isfinite(g.spacing) || !std::isfinite(g.origin)) {
    throw Error(ErrorKind::GridMismatch, std::string(what) + " needs a positive finite spacing");
  }
}

void check_grid(const Grid2D& g, const char* what) {
  check_grid(g.axis1, what);
  check_grid(g.axis2, what);
}

double relative_l2(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::GridMismatch, "relative_l2 on arrays of different size");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += norm2(a[i] - b[i]);
    den += norm2(b[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

}  // namespace qlcst
