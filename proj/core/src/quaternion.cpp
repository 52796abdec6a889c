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

#include "qlcst/quaternion.hpp"

#include "qlcst/errors.hpp"

namespace qlcst {

Quaternion exp_axis(const Quaternion& axis, double theta) {
  if (axis == kMu1) return exp_axis(Axis::Mu1, theta);
  if (axis == kMu2) return exp_axis(Axis::Mu2, theta);
  throw Error(ErrorKind::BadAxis, "exponent axis must be mu1 or mu2");
}

}  // namespace qlcst
