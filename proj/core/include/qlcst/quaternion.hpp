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

#include <cmath>
#include <complex>

namespace qlcst {

/// Element of the quaternion algebra, stored scalar-first: w + x·μ1 + y·μ2 + z·μ3
/// with μ1μ2 = μ3, μ2μ3 = μ1, μ3μ1 = μ2 and μ1² = μ2² = μ3² = −1.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  constexpr bool operator==(const Quaternion&) const = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kMu1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kMu2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kMu3{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// The two imaginary units the two-sided transforms exponentiate along.
enum class Axis { Mu1, Mu2 };

inline constexpr Quaternion unit(Axis axis) { return axis == Axis::Mu1 ? kMu1 : kMu2; }

/// cos(theta) + axis·sin(theta). No renormalization is applied.
inline Quaternion exp_axis(Axis axis, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return axis == Axis::Mu1 ? Quaternion{c, s, 0.0, 0.0} : Quaternion{c, 0.0, s, 0.0};
}

/// Same as above but accepts the axis as a quaternion; throws BadAxis unless it is exactly μ1 or μ2.
Quaternion exp_axis(const Quaternion& axis, double theta);

using Complex = std::complex<double>;

/// q = a + b·μ2 with a = w + x·μ1 and b = y + z·μ1, both in the μ1 subfield.
struct SymplecticPair {
  Complex a;
  Complex b;
};

constexpr SymplecticPair symplectic_split(const Quaternion& q) { return {Complex{q.w, q.x}, Complex{q.y, q.z}}; }

constexpr Quaternion symplectic_join(const SymplecticPair& p) {
  return {p.a.real(), p.a.imag(), p.b.real(), p.b.imag()};
}

}  // namespace qlcst
