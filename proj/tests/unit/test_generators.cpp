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

#include <gtest/gtest.h>

#include <cmath>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "qlcst/generators.hpp"

namespace qlcst {
namespace {

using Kind = GeneratorSpec::Kind;

GeneratorSpec spec_of(Kind kind) {
  GeneratorSpec s;
  s.kind = kind;
  return s;
}

TEST(Generators, GaussianSamples) {
  const Grid2D g = square(node_grid(8, 4.0));
  GeneratorSpec s;
  s.sigma = 1.5;
  const QSignal2D f = gen_signal(s, g);
  EXPECT_EQ(f.at(4, 4), Quaternion(1.0));
  EXPECT_DOUBLE_EQ(f.at(5, 2).w, std::exp(-(1.0 + 4.0) / (2 * 2.25)));
  EXPECT_EQ(f.at(5, 2).x, 0.0);
}

TEST(Generators, ShiftedAndDilated) {
  auto s = spec_of(Kind::ShiftedGaussian);
  s.center1 = 1.0;
  s.center2 = -2.0;
  EXPECT_EQ(signal_function(s)(1.0, -2.0), Quaternion(1.0));
  auto d = spec_of(Kind::DilatedGaussian);
  d.scale = 2.0;
  EXPECT_DOUBLE_EQ(signal_function(d)(0.5, 0.0).w, 2.0 * std::exp(-0.5));
}

TEST(Generators, HermitePolynomials) {
  auto s = spec_of(Kind::Hermite);
  s.order1 = 3;
  s.order2 = 2;
  const auto fn = signal_function(s);
  for (double x1 : {-1.3, 0.4, 2.0})
    for (double x2 : {-0.7, 1.1}) {
      const double h3 = 8 * x1 * x1 * x1 - 12 * x1;
      const double h2 = 4 * x2 * x2 - 2;
      EXPECT_NEAR(fn(x1, x2).w, h3 * h2 * std::exp(-(x1 * x1 + x2 * x2) / 2), 1e-12);
    }
  s.order1 = 1;
  s.order2 = 0;
  const auto odd = signal_function(s);
  EXPECT_DOUBLE_EQ(odd(-0.8, 0.3).w, -odd(0.8, 0.3).w);
}

TEST(Generators, RandomHermiteIsOrthonormalExpansion) {
  auto s = spec_of(Kind::RandomHermite);
  s.seed = 42;
  s.max_order = 2;
  const Grid2D g = square(midpoint_grid(96, 10.0));
  const QSignal2D f = gen_signal(s, g);
  EXPECT_EQ(f.samples(), gen_signal(s, g).samples());
  const auto psi = [](int n, double x) {
    const double h[] = {1.0, 2 * x, 4 * x * x - 2};
    const double norm[] = {1.0, std::sqrt(2.0), std::sqrt(8.0)};
    return h[n] * std::exp(-x * x / 2) / (norm[n] * std::pow(oracle::kPi, 0.25));
  };
  double coeff_energy = 0.0;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      Quaternion c;
      for (std::size_t a = 0; a < g.axis1.n; ++a)
        for (std::size_t b = 0; b < g.axis2.n; ++b)
          c += f.at(a, b) * (psi(i, g.axis1.at(a)) * psi(j, g.axis2.at(b)) * g.cell());
      coeff_energy += norm2(c);
    }
  EXPECT_NEAR(f.energy(), coeff_energy, 1e-10 * coeff_energy);
  s.seed = 43;
  EXPECT_NE(gen_signal(s, g).samples(), f.samples());
}

TEST(Generators, ChirpHasGaussianModulus) {
  auto s = spec_of(Kind::Chirp);
  s.rate = 0.8;
  const auto fn = signal_function(s);
  const Quaternion q = fn(1.2, -0.6);
  EXPECT_NEAR(abs(q), std::exp(-(1.44 + 0.36) / 2), 1e-14);
  const Quaternion expect =
      exp_axis(Axis::Mu1, 0.8 * 1.44) * std::exp(-(1.44 + 0.36) / 2) * exp_axis(Axis::Mu2, 0.8 * 0.36);
  EXPECT_NEAR(abs(q - expect), 0.0, 1e-15);
}

TEST(Generators, ImpulseAtNearestNode) {
  const Grid2D g = square(node_grid(8, 2.0));
  const QSignal2D f = gen_signal(spec_of(Kind::Impulse), g);
  EXPECT_EQ(f.at(4, 4), Quaternion(1.0 / g.cell()));
  EXPECT_NEAR(f.energy(), 1.0 / g.cell(), 1e-12);
  const Grid2D shifted{Grid1D{5, 1.0, 1.0}, Grid1D{5, -9.0, 1.0}};
  EXPECT_EQ(gen_signal(spec_of(Kind::Impulse), shifted).at(0, 4), Quaternion(1.0));
  EXPECT_QLCST_ERROR(signal_function(spec_of(Kind::Impulse)), BadParameter);
}

TEST(Generators, NoiseIsSeeded) {
  const Grid2D g = square(midpoint_grid(6, 1.0));
  auto s = spec_of(Kind::Noise);
  s.seed = 7;
  const QSignal2D a = gen_signal(s, g);
  EXPECT_EQ(a.samples(), gen_signal(s, g).samples());
  s.seed = 8;
  EXPECT_NE(a.samples(), gen_signal(s, g).samples());
}

TEST(Generators, NormalizeGivesUnitEnergy) {
  const Grid2D g = square(midpoint_grid(16, 5.0));
  for (Kind k : {Kind::Gaussian, Kind::Hermite, Kind::Chirp, Kind::Impulse, Kind::Noise}) {
    auto s = spec_of(k);
    s.order1 = 2;
    s.normalize = true;
    EXPECT_NEAR(gen_signal(s, g).energy(), 1.0, 1e-13) << s.label();
  }
}

TEST(Generators, ParseKindAndLabels) {
  const std::pair<const char*, Kind> names[] = {
      {"gaussian", Kind::Gaussian}, {"shifted-gaussian", Kind::ShiftedGaussian},
      {"dilated-gaussian", Kind::DilatedGaussian}, {"hermite", Kind::Hermite}, {"chirp", Kind::Chirp},
      {"impulse", Kind::Impulse}, {"random-hermite", Kind::RandomHermite}, {"noise", Kind::Noise}};
  for (const auto& [name, kind] : names) {
    EXPECT_EQ(GeneratorSpec::parse_kind(name), kind);
    EXPECT_EQ(spec_of(kind).label().rfind(name, 0), 0u) << name;
  }
  EXPECT_EQ(GeneratorSpec{}.label(), "gaussian(1)");
  EXPECT_QLCST_ERROR(GeneratorSpec::parse_kind("sinc"), BadParameter);
}

TEST(Generators, RejectsBadParameters) {
  const Grid2D g = square(midpoint_grid(4, 1.0));
  GeneratorSpec s;
  s.sigma = 0.0;
  EXPECT_QLCST_ERROR(gen_signal(s, g), BadParameter);
  s = spec_of(Kind::DilatedGaussian);
  s.scale = -1.0;
  EXPECT_QLCST_ERROR(gen_signal(s, g), BadParameter);
  s = spec_of(Kind::Hermite);
  s.order1 = 41;
  EXPECT_QLCST_ERROR(gen_signal(s, g), BadParameter);
  s.order1 = -1;
  EXPECT_QLCST_ERROR(gen_signal(s, g), BadParameter);
  s = spec_of(Kind::ShiftedGaussian);
  s.center1 = std::nan("");
  EXPECT_QLCST_ERROR(gen_signal(s, g), BadParameter);
  EXPECT_QLCST_ERROR(gen_signal(GeneratorSpec{}, square(Grid1D{0, 0.0, 1.0})), GridMismatch);
}

}  // namespace
}  // namespace qlcst
