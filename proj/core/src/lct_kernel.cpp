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

#include "qlcst/lct_kernel.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "qlcst/errors.hpp"

namespace qlcst {

ParamMatrix ParamMatrix::validate(double a, double b, double c, double d, std::optional<std::string> label) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw Error(ErrorKind::BadParameter, "matrix entries must be finite");
  }
  const double det = a * d - b * c;
  if (std::abs(det - 1.0) > kParamTolerance) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "AD - BC = %.17g, expected 1", det);
    throw Error(ErrorKind::DeterminantError, buf);
  }
  if (std::abs(b) <= kParamTolerance) {
    throw Error(ErrorKind::ZeroBError, "B must be nonzero (the B = 0 chirp branch is not supported)");
  }
  if (!label && a == 0.0 && b == 1.0 && c == -1.0 && d == 0.0) label = "fourier/S-transform case";
  return ParamMatrix(a, b, c, d, std::move(label));
}

ParamMatrix ParamMatrix::parse(std::string_view text) {
  std::vector<double> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::BadParameter, "cannot parse matrix \"" + std::string(text) + "\", expected A,B,C,D");
    }
    v.push_back(value);
    pos = end + 1;
  }
  if (v.size() != 4) {
    throw Error(ErrorKind::BadParameter, "matrix \"" + std::string(text) + "\" needs exactly four entries");
  }
  return validate(v[0], v[1], v[2], v[3]);
}

std::string ParamMatrix::to_string() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", a_, b_, c_, d_);
  return buf;
}

double kernel_phase(const ParamMatrix& m, double x, double u) noexcept {
  const double b = m.b();
  return m.a() / (2.0 * b) * x * x - x * u / b + m.d() / (2.0 * b) * u * u - kPi / 4.0;
}

double kernel_magnitude(const ParamMatrix& m) noexcept { return 1.0 / std::sqrt(2.0 * kPi * std::abs(m.b())); }

Quaternion kernel_eval(const KernelSpec& spec, double x, double u) {
  double phase = kernel_phase(spec.m, x, u);
  if (spec.direction == Direction::Inverse) phase = -phase;
  return exp_axis(spec.axis, phase) * kernel_magnitude(spec.m);
}

}  // namespace qlcst
