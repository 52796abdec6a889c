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

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "qlcst/grid.hpp"

namespace qlcst {

/// Test-battery signals. Parameters not used by a kind are ignored.
struct GeneratorSpec {
  enum class Kind { Gaussian, ShiftedGaussian, DilatedGaussian, Hermite, Chirp, Impulse, RandomHermite, Noise };

  Kind kind = Kind::Gaussian;
  double sigma = 1.0;           // Gaussian width
  double center1 = 0.0;         // ShiftedGaussian center
  double center2 = 0.0;
  double scale = 1.0;           // DilatedGaussian a: a·e^{−a²|x|²/2}
  int order1 = 0;               // Hermite orders
  int order2 = 0;
  double rate = 0.5;            // Chirp rate
  std::uint64_t seed = 1;       // RandomHermite, Noise
  int max_order = 3;            // RandomHermite
  bool normalize = false;       // rescale to unit energy after sampling

  static Kind parse_kind(std::string_view name);
  std::string label() const;
};

/// Closed-form value at a point for every kind except Impulse and Noise, which only exist on a grid.
std::function<Quaternion(double, double)> signal_function(const GeneratorSpec& spec);

/// Samples spec on grid. Impulse: one sample of 1/(Δx1Δx2) at the node nearest (0, 0).
/// Throws BadParameter for invalid parameters.
QSignal2D gen_signal(const GeneratorSpec& spec, const Grid2D& grid);

/// Samples an arbitrary function on grid.
QSignal2D sample(const std::function<Quaternion(double, double)>& fn, const Grid2D& grid);

}  // namespace qlcst
