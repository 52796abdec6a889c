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

#include "oracles.hpp"
#include "qlcst/errors.hpp"
#include "qlcst/quaternion.hpp"

namespace qlcst {
namespace {

void expect_near(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  EXPECT_NEAR(a.w, b.w, tol);
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
  EXPECT_NEAR(a.z, b.z, tol);
}

TEST(Quaternion, BasisProducts) {
  EXPECT_EQ(kMu1 * kMu2, kMu3);
  EXPECT_EQ(kMu2 * kMu1, -kMu3);
  EXPECT_EQ(kMu2 * kMu3, kMu1);
  EXPECT_EQ(kMu3 * kMu1, kMu2);
  EXPECT_EQ(kMu1 * kMu1, -kOne);
  EXPECT_EQ(kMu3 * kMu3, -kOne);
}

TEST(Quaternion, ExpandedProduct) {
  EXPECT_EQ((kOne + kMu1) * (kOne + kMu2), (Quaternion{1, 1, 1, 1}));
}

TEST(Quaternion, NormThroughConjugate) {
  const Quaternion q{1, 1, 1, 1};
  EXPECT_EQ(q * conj(q), Quaternion(4.0));
  EXPECT_DOUBLE_EQ(norm2(q), 4.0);
  EXPECT_DOUBLE_EQ(abs(q), 2.0);
}

TEST(Quaternion, Conjugation) {
  EXPECT_EQ(conj(kMu1), -kMu1);
  EXPECT_EQ(conj(kOne), kOne);
  EXPECT_EQ(conj(kMu1 * kMu2), conj(kMu2) * conj(kMu1));
  EXPECT_EQ(conj(kMu1 * kMu2), -kMu3);
}

TEST(Quaternion, AlgebraLawsOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Quaternion p = oracle::random_quaternion(rng);
    const Quaternion q = oracle::random_quaternion(rng);
    const Quaternion r = oracle::random_quaternion(rng);
    expect_near((p * q) * r, p * (q * r));
    expect_near(conj(p * q), conj(q) * conj(p));
    EXPECT_NEAR(abs(p * q), abs(p) * abs(q), 1e-12);
  }
}

TEST(Quaternion, ExpAxis) {
  EXPECT_EQ(exp_axis(Axis::Mu1, 0.0), kOne);
  expect_near(exp_axis(Axis::Mu1, oracle::kPi / 2), kMu1);
  expect_near(exp_axis(Axis::Mu2, -oracle::kPi / 4), Quaternion{0.7071067812, 0, -0.7071067812, 0}, 1e-10);
  expect_near(exp_axis(kMu2, 0.3), exp_axis(Axis::Mu2, 0.3));
}

TEST(Quaternion, ExpAxisRejectsOtherUnits) {
  try {
    exp_axis(kMu3, 1.0);
    FAIL() << "expected BadAxis";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadAxis);
  }
}

TEST(Symplectic, SplitExamples) {
  const auto s = symplectic_split(Quaternion{1, 1, 1, 1});
  EXPECT_EQ(s.a, Complex(1, 1));
  EXPECT_EQ(s.b, Complex(1, 1));
  const auto m = symplectic_split(kMu2);
  EXPECT_EQ(m.a, Complex(0, 0));
  EXPECT_EQ(m.b, Complex(1, 0));
}

TEST(Symplectic, JoinInvertsSplit) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Quaternion q = oracle::random_quaternion(rng);
    EXPECT_EQ(symplectic_join(symplectic_split(q)), q);
  }
}

TEST(Symplectic, MatchesAPlusBMu2) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const Quaternion q = oracle::random_quaternion(rng);
    const auto s = symplectic_split(q);
    const Quaternion a{s.a.real(), s.a.imag(), 0, 0};
    const Quaternion b{s.b.real(), s.b.imag(), 0, 0};
    expect_near(a + b * kMu2, q);
  }
}

}  // namespace
}  // namespace qlcst
