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

#include <random>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "qlcst/generators.hpp"
#include "qlcst/qlct.hpp"
#include "qlcst/stransform.hpp"

namespace qlcst {
namespace {

const oracle::Mat kFourier{0, 1, -1, 0};
const oracle::Mat kFractional{0.5, std::sqrt(3.0) / 2, -std::sqrt(3.0) / 2, 0.5};
const oracle::Mat kFresnel2{1, 2, 0, 1};

ParamMatrix to_param(const oracle::Mat& m) { return ParamMatrix::validate(m.a, m.b, m.c, m.d); }

QSignal2D gaussian(const Grid2D& g) { return gen_signal(GeneratorSpec{}, g); }

QSignal2D random_hermite(const Grid2D& g, std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = GeneratorSpec::Kind::RandomHermite;
  s.seed = seed;
  return gen_signal(s, g);
}

/// Σ_x K1(x1,w1) f(x) conj(Ψ(u−x, w)) K2(x2,w2) Δx at one (u, w).
Quaternion brute_point(const QSignal2D& f, const WindowSpec& psi, const oracle::Mat& m1, const oracle::Mat& m2,
                       double u1, double u2, double w1, double w2) {
  const Grid2D& x = f.grid();
  Quaternion acc;
  for (std::size_t i = 0; i < x.axis1.n; ++i)
    for (std::size_t j = 0; j < x.axis2.n; ++j) {
      const double x1 = x.axis1.at(i), x2 = x.axis2.at(j);
      acc += oracle::kernel(m1, kMu1, x1, w1) * f.at(i, j) * conj(psi.eval(u1 - x1, u2 - x2, w1, w2)) *
             oracle::kernel(m2, kMu2, x2, w2);
    }
  return acc * x.cell();
}

TEST(Qlcst, CoefficientsMatchBruteForceAtRandomPoints) {
  const Grid2D x = square(midpoint_grid(32, 8.0));
  const QSignal2D f = gaussian(x);
  const auto m = to_param(kFourier);
  const WindowSpec psi = WindowSpec::fixed_gaussian(1, 1);
  const Grid2D w = default_spectral_grid(x, m, m);
  const auto c = qlcst_forward(f, psi, m, m, x, w);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, 31);
  for (int k = 0; k < 5; ++k) {
    const std::size_t a = pick(rng), b = pick(rng), j1 = pick(rng), j2 = pick(rng);
    const Quaternion ref =
        brute_point(f, psi, kFourier, kFourier, x.axis1.at(a), x.axis2.at(b), w.axis1.at(j1), w.axis2.at(j2));
    EXPECT_LE(abs(c.at(a, b, j1, j2) - ref), 1e-10 * std::max(abs(ref), 1e-300));
  }
}

TEST(Qlcst, EvaluationStrategiesAgree) {
  const Grid2D x = square(midpoint_grid(10, 4.0));
  const Grid2D u = {centered_grid(5, 1.1), centered_grid(4, 0.9)};
  const Grid2D w = {centered_grid(6, 0.8), centered_grid(4, 0.7)};
  const QSignal2D f = random_hermite(x, 8);
  const auto m1 = to_param(kFractional);
  const auto m2 = to_param(kFresnel2);
  for (const auto& psi : {WindowSpec::fixed_gaussian(0.9, 1.4), WindowSpec::s_gaussian()}) {
    const auto direct = qlcst_forward(f, psi, m1, m2, u, w, QlcstMethod::Direct);
    const auto separable = qlcst_forward(f, psi, m1, m2, u, w, QlcstMethod::Separable);
    EXPECT_LT(relative_l2(separable.data(), direct.data()), 1e-12);
    if (!psi.depends_on_w()) {
      const auto slice = qlcst_forward(f, psi, m1, m2, u, w, QlcstMethod::Slice);
      EXPECT_LT(relative_l2(slice.data(), direct.data()), 1e-12);
    }
    // Direct evaluation at one point, independent of the library kernels.
    const Quaternion ref = brute_point(f, psi, kFractional, kFresnel2, u.axis1.at(1), u.axis2.at(2), w.axis1.at(4),
                                       w.axis2.at(0));
    EXPECT_NEAR(abs(direct.at(1, 2, 4, 0) - ref), 0.0, 1e-12);
  }
}

TEST(Qlcst, QuaternionTableWindowUsesDirectPath) {
  const Grid2D x = square(midpoint_grid(8, 3.0));
  QSignal2D table(square(midpoint_grid(6, 2.0)));
  std::mt19937_64 rng(4);
  for (auto& q : table.samples()) q = oracle::random_quaternion(rng);
  const WindowSpec psi(TableWindow{table, ""});
  const Grid2D u = square(centered_grid(3, 1.0));
  const Grid2D w = square(centered_grid(4, 0.6));
  const QSignal2D f = random_hermite(x, 2);
  const auto c = qlcst_forward(f, psi, to_param(kFourier), to_param(kFresnel2), u, w);
  const Quaternion ref = brute_point(f, psi, kFourier, kFresnel2, u.axis1.at(0), u.axis2.at(2), w.axis1.at(3),
                                     w.axis2.at(1));
  EXPECT_NEAR(abs(c.at(0, 2, 3, 1) - ref), 0.0, 1e-12);
  EXPECT_QLCST_ERROR(qlcst_forward(f, psi, to_param(kFourier), to_param(kFourier), u, w, QlcstMethod::Separable),
                     BadParameter);
}

TEST(Qlcst, ConstantWindowReducesToQlct) {
  const Grid2D x = square(midpoint_grid(16, 4.0));
  const QSignal2D f = random_hermite(x, 3);
  for (const auto& m : {kFourier, kFractional, kFresnel2}) {
    const auto p = to_param(m);
    const Grid2D w = default_spectral_grid(x, p, p);
    const Grid2D u = square(centered_grid(3, 2.0));
    const auto c = qlcst_forward(f, WindowSpec::constant(1.0), p, p, u, w);
    const auto l = qlct_forward(f, p, p, w);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) EXPECT_LT(relative_l2(c.slice(a, b), l), 1e-10);
  }
}

TEST(Qlcst, ZeroSignalGivesZeroCoefficients) {
  const Grid2D x = square(midpoint_grid(8, 3.0));
  const auto p = to_param(kFourier);
  const auto c = qlcst_forward(QSignal2D(x), WindowSpec::fixed_gaussian(1, 1), p, p);
  for (const auto& q : c.data()) EXPECT_EQ(q, Quaternion{});
  EXPECT_EQ(c.energy(), 0.0);
}

TEST(Qlcst, SliceAgreesWithFullTransform) {
  const Grid2D x = square(midpoint_grid(12, 4.0));
  const QSignal2D f = random_hermite(x, 6);
  const auto p = to_param(kFractional);
  const WindowSpec psi = WindowSpec::fixed_gaussian(1, 1);
  const auto c = qlcst_forward(f, psi, p, p);
  const auto s = qlcst_slice(f, psi, p, p, x.axis1.at(3), x.axis2.at(7), c.wgrid());
  EXPECT_LT(relative_l2(s, c.slice(3, 7)), 1e-14);
  EXPECT_QLCST_ERROR(qlcst_slice(f, WindowSpec::s_gaussian(), p, p, 0, 0, c.wgrid()), BadParameter);
}

TEST(PointwiseInverse, ConstantWindowRecoversSignal) {
  const Grid2D x = square(midpoint_grid(32, 8.0));
  const QSignal2D f = gaussian(x);
  const auto p = to_param(kFourier);
  const auto c = qlcst_forward(f, WindowSpec::constant(1.0), p, p, square(centered_grid(2, 1.0)),
                               default_spectral_grid(x, p, p));
  EXPECT_LT(relative_l2(qlcst_pointwise_inverse(c, 1, 0, x), f), 1e-6);
}

TEST(PointwiseInverse, RecoversWindowedProductAtOrigin) {
  const Grid2D x = square(midpoint_grid(32, 8.0));
  const QSignal2D f = gaussian(x);
  const auto p = to_param(kFourier);
  const WindowSpec psi = WindowSpec::fixed_gaussian(1, 1);
  const Grid2D u = square(Grid1D{3, -1.0, 1.0});
  const auto c = qlcst_forward(f, psi, p, p, u, default_spectral_grid(x, p, p));
  QSignal2D expect(x);
  for (std::size_t i = 0; i < x.axis1.n; ++i)
    for (std::size_t j = 0; j < x.axis2.n; ++j) {
      const double x1 = x.axis1.at(i), x2 = x.axis2.at(j);
      expect.at(i, j) = f.at(i, j) * conj(psi.eval(-x1, -x2, 0, 0));
    }
  EXPECT_LT(relative_l2(qlcst_pointwise_inverse(c, 1, 1, x), expect), 1e-5);
  EXPECT_QLCST_ERROR(qlcst_pointwise_inverse(c, 3, 0, x), GridMismatch);
}

TEST(Reconstruction, RecoversGaussianForEachMatrix) {
  const Grid2D x = square(midpoint_grid(32, 8.0));
  const QSignal2D f = gaussian(x);
  for (const auto& m : {kFourier, kFractional}) {
    const auto p = to_param(m);
    const auto c = qlcst_forward(f, WindowSpec::fixed_gaussian(1, 1), p, p);
    EXPECT_LT(relative_l2(qlcst_reconstruct(c), f), 1e-3);
  }
}

TEST(Reconstruction, QuaternionSignalAndAnisotropicWindow) {
  const Grid2D x = square(midpoint_grid(24, 7.0));
  const QSignal2D f = random_hermite(x, 12);
  const auto m1 = to_param(kFresnel2);
  const auto m2 = to_param(kFractional);
  const auto c = qlcst_forward(f, WindowSpec::fixed_gaussian(0.8, 1.3), m1, m2);
  EXPECT_LT(relative_l2(qlcst_reconstruct(c), f), 1e-3);
}

TEST(Reconstruction, ZeroCoefficientsGiveZero) {
  const Grid2D x = square(midpoint_grid(8, 3.0));
  const auto p = to_param(kFourier);
  QLCSTCoefficients c(x, default_spectral_grid(x, p, p), WindowSpec::fixed_gaussian(1, 1), p, p);
  const QSignal2D r = qlcst_reconstruct(c);
  for (const auto& q : r.samples()) EXPECT_EQ(q, Quaternion{});
}

TEST(Reconstruction, RejectsWindowsWithoutConstantAdmissibility) {
  const Grid2D x = square(midpoint_grid(8, 3.0));
  const auto p = to_param(kFourier);
  QLCSTCoefficients c(x, default_spectral_grid(x, p, p), WindowSpec::s_gaussian(), p, p);
  EXPECT_QLCST_ERROR(qlcst_reconstruct(c), AdmissibilityError);
}

TEST(EnergyIdentity, GaussianAllMatrices) {
  const Grid2D x = square(midpoint_grid(32, 8.0));
  const QSignal2D f = gaussian(x);
  for (const auto& m : {kFourier, kFractional, kFresnel2}) {
    const auto p = to_param(m);
    const auto c = qlcst_forward(f, WindowSpec::fixed_gaussian(1, 1), p, p);
    EXPECT_LT(energy_identity_gap(c, f), 1e-3);
  }
}

TEST(EnergyIdentity, ScaleInvariantAndRandomHermite) {
  const Grid2D x = square(midpoint_grid(32, 8.0));
  const auto p = to_param(kFresnel2);
  const WindowSpec psi = WindowSpec::fixed_gaussian(1, 1);
  const QSignal2D f = gaussian(x);
  QSignal2D f2 = f;
  for (auto& q : f2.samples()) q *= 2.0;
  const double g1 = energy_identity_gap(qlcst_forward(f, psi, p, p), f);
  const double g2 = energy_identity_gap(qlcst_forward(f2, psi, p, p), f2);
  EXPECT_NEAR(g1, g2, 1e-12);
  const QSignal2D h = random_hermite(x, 21);
  EXPECT_LT(energy_identity_gap(qlcst_forward(h, psi, p, p), h), 5e-3);
}

TEST(EnergyIdentity, ZeroSignalThrows) {
  const Grid2D x = square(midpoint_grid(8, 3.0));
  const auto p = to_param(kFourier);
  const QSignal2D zero(x);
  EXPECT_QLCST_ERROR(energy_identity_gap(qlcst_forward(zero, WindowSpec::fixed_gaussian(1, 1), p, p), zero), ZeroSignal);
}

TEST(Orthogonality, SelfPairingIsEnergy) {
  const Grid2D x = square(midpoint_grid(24, 7.0));
  const QSignal2D f = gaussian(x);
  const auto p = to_param(kFractional);
  const WindowSpec psi = WindowSpec::fixed_gaussian(1, 1);
  const auto c = qlcst_forward(f, psi, p, p);
  const Quaternion q = orthogonality_form(c, c);
  const double target = lambda_constant(psi) * f.energy();
  EXPECT_NEAR(q.w, target, 1e-3 * target);
  EXPECT_LT(std::hypot(q.x, q.y, q.z), 1e-6 * target);
  const auto zero = qlcst_forward(QSignal2D(x), psi, p, p);
  EXPECT_EQ(orthogonality_form(c, zero), Quaternion{});
}

TEST(Orthogonality, LayoutMismatchThrows) {
  const Grid2D x = square(midpoint_grid(8, 3.0));
  const auto p = to_param(kFourier);
  const auto c1 = qlcst_forward(QSignal2D(x), WindowSpec::fixed_gaussian(1, 1), p, p);
  const auto c2 = qlcst_forward(QSignal2D(x), WindowSpec::fixed_gaussian(2, 1), p, p);
  EXPECT_QLCST_ERROR(orthogonality_form(c1, c2), GridMismatch);
}

TEST(Marginal, SGaussianWindowWithWideTranslationGrid) {
  const Grid2D x = square(midpoint_grid(32, 8.0));
  const QSignal2D f = gaussian(x);
  const auto p = to_param(kFourier);
  const auto c = qlcst_forward(f, WindowSpec::s_gaussian(), p, p, square(midpoint_grid(96, 16.0)),
                               square(centered_grid(16, 1.0)));
  EXPECT_LT(marginal_qlct_gap(c, f, p, p), 1e-3);
}

TEST(Marginal, NarrowFixedWindowWithFineTranslationGrid) {
  const Grid2D x = square(midpoint_grid(32, 8.0));
  const QSignal2D f = gaussian(x);
  const auto p = to_param(kFractional);
  const auto c = qlcst_forward(f, WindowSpec::fixed_gaussian(0.05, 0.05), p, p, square(midpoint_grid(160, 4.0)),
                               square(centered_grid(6, 0.9)));
  EXPECT_LT(marginal_qlct_gap(c, f, p, p), 5e-3);
}

TEST(Marginal, ZeroSignalGapIsZero) {
  const Grid2D x = square(midpoint_grid(8, 3.0));
  const auto p = to_param(kFourier);
  const auto c = qlcst_forward(QSignal2D(x), WindowSpec::fixed_gaussian(1, 1), p, p);
  EXPECT_EQ(marginal_qlct_gap(c, QSignal2D(x), p, p), 0.0);
}

TEST(Covariance, ParityShiftModulation) {
  const Grid2D x = square(midpoint_grid(48, 8.0));
  const auto p = to_param(kFourier);
  const auto fn = [](double x1, double x2) { return Quaternion(std::exp(-(x1 * x1 + x2 * x2) / 2)); };
  const auto r = covariance_residuals(fn, x, WindowSpec::fixed_gaussian(1, 1), p, p, {1.0, 0.0}, {1.0, 1.0});
  EXPECT_LT(r.parity, 1e-10);
  EXPECT_LT(r.shift, 1e-3);
  EXPECT_LT(std::min(r.modulation_ordered, r.modulation_swapped), 1e-2);
}

TEST(Covariance, ReadingsDifferWhenADiffer) {
  const Grid2D x = square(midpoint_grid(24, 6.0));
  const auto p = ParamMatrix::validate(0.5, 1.0, -0.5, 1.0);
  const auto fn = [](double x1, double x2) {
    return Quaternion(std::exp(-(x1 * x1 + x2 * x2) / 2), 0.0, 0.5 * std::exp(-(x1 * x1 + x2 * x2)), 0.0);
  };
  const auto r = covariance_residuals(fn, x, WindowSpec::fixed_gaussian(1, 1), p, p, {0.5, -0.5}, {0.4, 0.3});
  EXPECT_LT(r.modulation_ordered, 1e-10);
  EXPECT_GT(r.modulation_swapped, 1e-2);
}

TEST(Covariance, RejectsAsymmetricGrid) {
  const auto p = to_param(kFourier);
  const auto fn = [](double, double) { return Quaternion(1.0); };
  EXPECT_QLCST_ERROR(covariance_residuals(fn, square(Grid1D{8, -1.0, 0.5}), WindowSpec::fixed_gaussian(1, 1), p, p,
                                          {0, 0}, {0, 0}),
                     GridMismatch);
}

TEST(SpecialCases, Matrices) {
  const auto st = special_case_matrix({SpecialCase::Kind::Stockwell, 0});
  EXPECT_TRUE(st.first.same_parameters(ParamMatrix::validate(0, 1, -1, 0)));
  const auto half = special_case_matrix({SpecialCase::Kind::Fractional, oracle::kPi / 2}).first;
  EXPECT_NEAR(half.a(), 0.0, 1e-15);
  EXPECT_NEAR(half.b(), 1.0, 1e-15);
  EXPECT_NEAR(half.c(), -1.0, 1e-15);
  EXPECT_NEAR(half.d(), 0.0, 1e-15);
  const auto fz = special_case_matrix({SpecialCase::Kind::Fresnel, 2.0}).second;
  EXPECT_TRUE(fz.same_parameters(ParamMatrix::validate(1, 2, 0, 1)));
  EXPECT_QLCST_ERROR(special_case_matrix({SpecialCase::Kind::Fractional, 0.0}), DegenerateAngle);
  EXPECT_QLCST_ERROR(special_case_matrix({SpecialCase::Kind::Fractional, oracle::kPi}), DegenerateAngle);
  EXPECT_QLCST_ERROR(special_case_matrix({SpecialCase::Kind::Fresnel, 0.0}), ZeroBError);
}

}  // namespace
}  // namespace qlcst
