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

#include <chrono>
#include <random>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "qlcst/generators.hpp"
#include "qlcst/qlct.hpp"

namespace qlcst {
namespace {

ParamMatrix to_param(const oracle::Mat& m) { return ParamMatrix::validate(m.a, m.b, m.c, m.d); }

const oracle::Mat kFourier{0, 1, -1, 0};
const oracle::Mat kFresnel2{1, 2, 0, 1};
const oracle::Mat kFractional{0.5, std::sqrt(3.0) / 2, -std::sqrt(3.0) / 2, 0.5};

QSignal2D gaussian(const Grid2D& g) { return gen_signal(GeneratorSpec{}, g); }

QSignal2D random_signal(const Grid2D& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QSignal2D f(g);
  for (auto& q : f.samples()) q = oracle::random_quaternion(rng);
  return f;
}

TEST(QlctDirect, MatchesBruteForceLoops) {
  const Grid2D x = square(midpoint_grid(12, 4.0));
  const Grid2D u = {centered_grid(10, 0.7), centered_grid(9, 0.45)};
  const QSignal2D f = random_signal(x, 1);
  for (const auto& [m1, m2] : {std::pair{kFourier, kFresnel2}, std::pair{kFractional, kFourier}}) {
    const auto s = qlct_forward(f, to_param(m1), to_param(m2), u);
    EXPECT_LT(oracle::rel_l2(s.samples(), oracle::brute_qlct(f, m1, m2, u)), 1e-12);
  }
}

TEST(QlctDirect, ImpulseCollapsesToKernelProduct) {
  const Grid2D x = square(node_grid(16, 4.0));
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::Impulse;
  const QSignal2D f = gen_signal(spec, x);
  const auto m1 = to_param(kFractional);
  const auto m2 = to_param(kFresnel2);
  const Grid2D u = default_spectral_grid(x, m1, m2);
  const double modulus = 1.0 / (2 * oracle::kPi * std::sqrt(std::fabs(m1.b() * m2.b())));
  for (const auto& s : {qlct_forward(f, m1, m2, u), qlct_fast_forward(f, m1, m2, u)}) {
    for (std::size_t a = 0; a < u.axis1.n; ++a) {
      for (std::size_t b = 0; b < u.axis2.n; ++b) {
        const Quaternion expect = oracle::kernel(kFractional, kMu1, 0.0, u.axis1.at(a)) *
                                  oracle::kernel(kFresnel2, kMu2, 0.0, u.axis2.at(b));
        EXPECT_NEAR(abs(s.at(a, b) - expect), 0.0, 1e-12);
        EXPECT_NEAR(abs(s.at(a, b)), modulus, 1e-12);
      }
    }
  }
}

TEST(QlctDirect, GaussianMatchesClosedForm) {
  const Grid2D x = square(midpoint_grid(64, 8.0));
  const QSignal2D f = gaussian(x);
  for (const auto& m : {kFourier, kFractional, kFresnel2}) {
    const Grid2D u = default_spectral_grid(x, to_param(m), to_param(m));
    const auto s = qlct_fast_forward(f, to_param(m), to_param(m), u);
    std::vector<Quaternion> expect;
    for (std::size_t a = 0; a < u.axis1.n; ++a)
      for (std::size_t b = 0; b < u.axis2.n; ++b)
        expect.push_back(oracle::gaussian_qlct(m, m, u.axis1.at(a), u.axis2.at(b)));
    EXPECT_LT(oracle::rel_l2(s.samples(), expect), 1e-8);
  }
}

TEST(QlctDirect, ZeroInZeroOut) {
  const Grid2D x = square(midpoint_grid(8, 2.0));
  const auto m = to_param(kFourier);
  const Grid2D u = default_spectral_grid(x, m, m);
  const QSpectrum2D fwd = qlct_forward(QSignal2D(x), m, m, u);
  const QSignal2D inv = qlct_inverse(QSpectrum2D(u), m, m, x);
  for (const auto& q : fwd.samples()) EXPECT_EQ(q, Quaternion{});
  for (const auto& q : inv.samples()) EXPECT_EQ(q, Quaternion{});
}

TEST(QlctDirect, RealScalarLinearity) {
  const Grid2D x = square(midpoint_grid(10, 3.0));
  const auto m1 = to_param(kFractional);
  const auto m2 = to_param(kFresnel2);
  const Grid2D u = default_spectral_grid(x, m1, m2);
  const QSignal2D f = random_signal(x, 2);
  const QSignal2D g = random_signal(x, 3);
  QSignal2D h(x);
  for (std::size_t k = 0; k < h.samples().size(); ++k) h.samples()[k] = 2.5 * f.samples()[k] - 0.75 * g.samples()[k];
  const auto sf = qlct_forward(f, m1, m2, u);
  const auto sg = qlct_forward(g, m1, m2, u);
  std::vector<Quaternion> expect;
  for (std::size_t k = 0; k < sf.samples().size(); ++k) expect.push_back(2.5 * sf.samples()[k] - 0.75 * sg.samples()[k]);
  EXPECT_LT(oracle::rel_l2(qlct_forward(h, m1, m2, u).samples(), expect), 1e-13);
}

TEST(QlctRoundTrip, DirectInverse) {
  const Grid2D x = square(midpoint_grid(24, 6.0));
  const QSignal2D f = gaussian(x);
  for (const auto& m : {kFourier, kFractional}) {
    const auto p = to_param(m);
    const Grid2D u = default_spectral_grid(x, p, p);
    EXPECT_LT(relative_l2(qlct_inverse(qlct_forward(f, p, p, u), p, p, x), f), 1e-10);
  }
}

TEST(QlctRoundTrip, FastPathAtAcceptanceScale) {
  const Grid2D x = square(midpoint_grid(64, 8.0));
  const QSignal2D f = gaussian(x);
  for (const auto& m : {kFourier, kFractional, kFresnel2}) {
    const auto p = to_param(m);
    const Grid2D u = default_spectral_grid(x, p, p);
    EXPECT_LT(relative_l2(qlct_fast_inverse(qlct_fast_forward(f, p, p, u), p, p, x), f), 1e-6);
  }
}

TEST(QlctFast, AgreesWithDirectOnRandomMatrices) {
  std::mt19937_64 rng(20);
  const Grid2D x = square(midpoint_grid(32, 6.0));
  for (int k = 0; k < 20; ++k) {
    const auto m1 = to_param(oracle::random_matrix(rng));
    const auto m2 = to_param(oracle::random_matrix(rng));
    const QSignal2D f = random_signal(x, 100 + k);
    const Grid2D u = default_spectral_grid(x, m1, m2);
    EXPECT_LT(relative_l2(qlct_fast_forward(f, m1, m2, u), qlct_forward(f, m1, m2, u)), 1e-8);
    const QSpectrum2D s(u, f.samples());
    EXPECT_LT(relative_l2(qlct_fast_inverse(s, m1, m2, x), qlct_inverse(s, m1, m2, x)), 1e-8);
  }
}

TEST(QlctFast, OffCentreGridsStillMatch) {
  const auto m1 = to_param(kFresnel2);
  const auto m2 = to_param(kFractional);
  const Grid2D x = {Grid1D{16, -2.3, 0.31}, Grid1D{16, -1.1, 0.27}};
  Grid2D u = default_spectral_grid(x, m1, m2);
  u.axis1.origin += 0.4;
  u.axis2.origin -= 1.3;
  const QSignal2D f = random_signal(x, 5);
  EXPECT_LT(relative_l2(qlct_fast_forward(f, m1, m2, u), qlct_forward(f, m1, m2, u)), 1e-10);
}

TEST(QlctFast, RejectsIncompatibleGrid) {
  const auto p = to_param(kFourier);
  const Grid2D x = square(midpoint_grid(16, 4.0));
  const Grid2D u = square(centered_grid(16, 0.5));
  EXPECT_QLCST_ERROR(qlct_fast_forward(QSignal2D(x), p, p, u), SpacingError);
  EXPECT_QLCST_ERROR(qlct_fast_inverse(QSpectrum2D(u), p, p, x), SpacingError);
}

TEST(QlctSeparable, MatchesDirectOnArbitraryGrid) {
  const auto m1 = to_param(kFractional);
  const auto m2 = to_param(kFresnel2);
  const Grid2D x = square(midpoint_grid(14, 4.0));
  const Grid2D u = {centered_grid(11, 0.6), centered_grid(7, 0.9)};
  const QSignal2D f = random_signal(x, 9);
  EXPECT_LT(relative_l2(qlct_separable_forward(f, m1, m2, u), qlct_forward(f, m1, m2, u)), 1e-12);
  const QSpectrum2D s = qlct_forward(f, m1, m2, u);
  EXPECT_LT(relative_l2(qlct_separable_inverse(s, m1, m2, x), qlct_inverse(s, m1, m2, x)), 1e-12);
}

TEST(QlctFast, SpeedupOverDirectAtN64) {
  const auto p = to_param(kFractional);
  const Grid2D x = square(midpoint_grid(64, 8.0));
  const Grid2D u = default_spectral_grid(x, p, p);
  const QSignal2D f = random_signal(x, 6);
  using Clock = std::chrono::steady_clock;
  qlct_fast_forward(f, p, p, u);  // plan creation
  auto t0 = Clock::now();
  for (int k = 0; k < 5; ++k) qlct_fast_forward(f, p, p, u);
  const double fast = std::chrono::duration<double>(Clock::now() - t0).count() / 5;
  t0 = Clock::now();
  qlct_forward(f, p, p, u);
  const double direct = std::chrono::duration<double>(Clock::now() - t0).count();
  EXPECT_GT(direct / fast, 10.0) << "direct " << direct << " s, fast " << fast << " s";
}

TEST(Plancherel, GaussianAndHermiteMix) {
  const Grid2D x = square(midpoint_grid(64, 8.0));
  const auto p = to_param(kFourier);
  EXPECT_LT(plancherel_gap(gaussian(x), p, p), 1e-6);
  GeneratorSpec rh;
  rh.kind = GeneratorSpec::Kind::RandomHermite;
  rh.seed = 44;
  EXPECT_LT(plancherel_gap(gen_signal(rh, x), to_param(kFresnel2), to_param(kFractional)), 1e-4);
}

TEST(Plancherel, ZeroSignalThrows) {
  const auto p = to_param(kFourier);
  EXPECT_QLCST_ERROR(plancherel_gap(QSignal2D(square(midpoint_grid(8, 2.0))), p, p), ZeroSignal);
}

}  // namespace
}  // namespace qlcst
