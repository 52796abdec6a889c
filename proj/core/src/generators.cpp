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

#include "qlcst/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "qlcst/errors.hpp"
#include "qlcst/lct_kernel.hpp"

namespace qlcst {
namespace {

constexpr int kMaxHermiteOrder = 40;

// Physicists' Hermite polynomial by the three-term recurrence.
double hermite_poly(int n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Orthonormal Hermite functions ψ_0..ψ_n at x.
std::vector<double> hermite_functions(int n, double x) {
  std::vector<double> h(static_cast<std::size_t>(n) + 1);
  h[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (n >= 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int k = 1; k < n; ++k) {
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * x * h[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * h[k - 1];
  }
  return h;
}

void validate(const GeneratorSpec& s) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(s.sigma)) throw Error(ErrorKind::BadParameter, "sigma must be positive");
  if (!positive(s.scale)) throw Error(ErrorKind::BadParameter, "dilation scale must be positive");
  if (!std::isfinite(s.center1) || !std::isfinite(s.center2) || !std::isfinite(s.rate)) {
    throw Error(ErrorKind::BadParameter, "generator parameters must be finite");
  }
  if (s.order1 < 0 || s.order2 < 0 || s.order1 > kMaxHermiteOrder || s.order2 > kMaxHermiteOrder) {
    throw Error(ErrorKind::BadParameter, "Hermite orders must lie in [0, 40]");
  }
  if (s.max_order < 0 || s.max_order > kMaxHermiteOrder) {
    throw Error(ErrorKind::BadParameter, "max_order must lie in [0, 40]");
  }
}

Quaternion random_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double w = normal(rng);
  const double x = normal(rng);
  const double y = normal(rng);
  const double z = normal(rng);
  return {w, x, y, z};
}

}  // namespace

GeneratorSpec::Kind GeneratorSpec::parse_kind(std::string_view name) {
  if (name == "gaussian") return Kind::Gaussian;
  if (name == "shifted-gaussian") return Kind::ShiftedGaussian;
  if (name == "dilated-gaussian") return Kind::DilatedGaussian;
  if (name == "hermite") return Kind::Hermite;
  if (name == "chirp") return Kind::Chirp;
  if (name == "impulse") return Kind::Impulse;
  if (name == "random-hermite") return Kind::RandomHermite;
  if (name == "noise") return Kind::Noise;
  throw Error(ErrorKind::BadParameter, "unknown generator \"" + std::string(name) + "\"");
}

std::string GeneratorSpec::label() const {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  switch (kind) {
    case Kind::Gaussian: return "gaussian(" + num(sigma) + ")";
    case Kind::ShiftedGaussian: return "shifted-gaussian(" + num(center1) + "," + num(center2) + ")";
    case Kind::DilatedGaussian: return "dilated-gaussian(" + num(scale) + ")";
    case Kind::Hermite: return "hermite(" + std::to_string(order1) + "," + std::to_string(order2) + ")";
    case Kind::Chirp: return "chirp(" + num(rate) + ")";
    case Kind::Impulse: return "impulse";
    case Kind::RandomHermite: return "random-hermite(" + std::to_string(seed) + ")";
    case Kind::Noise: return "noise(" + std::to_string(seed) + ")";
  }
  return "unknown";
}

std::function<Quaternion(double, double)> signal_function(const GeneratorSpec& spec) {
  validate(spec);
  const double s = spec.sigma;
  auto gauss = [s](double x1, double x2) { return std::exp(-(x1 * x1 + x2 * x2) / (2.0 * s * s)); };
  switch (spec.kind) {
    case GeneratorSpec::Kind::Gaussian:
      return [gauss](double x1, double x2) { return Quaternion(gauss(x1, x2)); };
    case GeneratorSpec::Kind::ShiftedGaussian:
      return [gauss, c1 = spec.center1, c2 = spec.center2](double x1, double x2) {
        return Quaternion(gauss(x1 - c1, x2 - c2));
      };
    case GeneratorSpec::Kind::DilatedGaussian:
      return [a = spec.scale](double x1, double x2) {
        return Quaternion(a * std::exp(-a * a * (x1 * x1 + x2 * x2) / 2.0));
      };
    case GeneratorSpec::Kind::Hermite:
      return [gauss, s, n1 = spec.order1, n2 = spec.order2](double x1, double x2) {
        return Quaternion(hermite_poly(n1, x1 / s) * hermite_poly(n2, x2 / s) * gauss(x1, x2));
      };
    case GeneratorSpec::Kind::Chirp:
      return [gauss, r = spec.rate](double x1, double x2) {
        return exp_axis(Axis::Mu1, r * x1 * x1) * gauss(x1, x2) * exp_axis(Axis::Mu2, r * x2 * x2);
      };
    case GeneratorSpec::Kind::RandomHermite: {
      const int n = spec.max_order;
      std::mt19937_64 rng(spec.seed);
      std::vector<Quaternion> coeff(static_cast<std::size_t>((n + 1) * (n + 1)));
      for (auto& q : coeff) q = random_quaternion(rng);
      return [coeff, n, s](double x1, double x2) {
        const auto h1 = hermite_functions(n, x1 / s);
        const auto h2 = hermite_functions(n, x2 / s);
        Quaternion acc;
        for (int i = 0; i <= n; ++i) {
          for (int j = 0; j <= n; ++j) acc += coeff[static_cast<std::size_t>(i * (n + 1) + j)] * (h1[i] * h2[j]);
        }
        return acc;
      };
    }
    case GeneratorSpec::Kind::Impulse:
    case GeneratorSpec::Kind::Noise:
      break;
  }
  throw Error(ErrorKind::BadParameter, spec.label() + " has no closed form; sample it with gen_signal");
}

QSignal2D sample(const std::function<Quaternion(double, double)>& fn, const Grid2D& grid) {
  check_grid(grid, "signal grid");
  QSignal2D f(grid);
  for (std::size_t i1 = 0; i1 < grid.axis1.n; ++i1) {
    for (std::size_t i2 = 0; i2 < grid.axis2.n; ++i2) f.at(i1, i2) = fn(grid.axis1.at(i1), grid.axis2.at(i2));
  }
  return f;
}

QSignal2D gen_signal(const GeneratorSpec& spec, const Grid2D& grid) {
  check_grid(grid, "signal grid");
  validate(spec);
  QSignal2D f(grid);
  if (spec.kind == GeneratorSpec::Kind::Impulse) {
    auto nearest = [](const Grid1D& g) {
      const double k = std::round(-g.origin / g.spacing);
      return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(g.n - 1)));
    };
    f.at(nearest(grid.axis1), nearest(grid.axis2)) = Quaternion(1.0 / grid.cell());
  } else if (spec.kind == GeneratorSpec::Kind::Noise) {
    std::mt19937_64 rng(spec.seed);
    for (auto& q : f.samples()) q = random_quaternion(rng);
  } else {
    f = sample(signal_function(spec), grid);
  }
  if (spec.normalize) {
    const double e = f.energy();
    if (e == 0.0) throw Error(ErrorKind::ZeroSignal, "cannot normalize a zero signal");
    const double k = 1.0 / std::sqrt(e);
    for (auto& q : f.samples()) q *= k;
  }
  return f;
}

}  // namespace qlcst
