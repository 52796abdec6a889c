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

#include "chirp_fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace qlcst::detail {

namespace {

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

using Buffer = std::unique_ptr<Complex[], FftwFree>;

Buffer make_buffer(std::size_t n) {
  return Buffer(static_cast<Complex*>(fftw_malloc(sizeof(Complex) * n)));
}

// fftw_plan_* is not thread-safe; execution of an existing plan on new aligned arrays is.
fftw_plan plan_for(std::size_t n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, fftw_plan> plans;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;
  Buffer scratch = make_buffer(n);
  auto* io = reinterpret_cast<fftw_complex*>(scratch.get());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), io, io, sign, FFTW_ESTIMATE);
  plans.emplace(key, plan);
  return plan;
}

}  // namespace

void chirp_lct_axis(Complex* data, std::size_t n1, std::size_t n2, int axis, const Grid1D& xg, const Grid1D& ug,
                    const ParamMatrix& m, int sigma, Direction direction) {
  const std::size_t n = axis == 1 ? n1 : n2;
  const std::size_t lines = axis == 1 ? n2 : n1;
  const double b = m.b();
  const double alpha = m.a() / (2.0 * b);
  const double delta = m.d() / (2.0 * b);
  const double bsign = b > 0.0 ? 1.0 : -1.0;
  const double s = static_cast<double>(sigma);

  // phase(x_k, u_m) = pre_k + post_m − 2π·sign(B)·k·m/n
  std::vector<Complex> pre(n);
  std::vector<Complex> post(n);
  const bool forward = direction == Direction::Forward;
  const double dir = forward ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = xg.at(k);
    const double pk = alpha * x * x - static_cast<double>(k) * xg.spacing * ug.origin / b;
    pre[k] = std::polar(1.0, dir * s * pk);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double u = ug.at(j);
    const double pm = delta * u * u - 0.25 * kPi - xg.origin * u / b;
    post[j] = std::polar(1.0, dir * s * pm);
  }
  const double scale = kernel_magnitude(m) * (forward ? xg.spacing : ug.spacing);
  // Sum over the input index carries e^{−i·dir·σ·sign(B)·2π·k·m/n}; FFTW's sign is that exponent's.
  const int fft_sign = (dir * s * bsign > 0.0) ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan = plan_for(n, fft_sign);

  const std::vector<Complex>& in_phase = forward ? pre : post;
  const std::vector<Complex>& out_phase = forward ? post : pre;

  Buffer buf = make_buffer(n);
  auto* io = reinterpret_cast<fftw_complex*>(buf.get());
  const std::size_t stride = axis == 1 ? n2 : 1;
  for (std::size_t line = 0; line < lines; ++line) {
    Complex* base = axis == 1 ? data + line : data + line * n2;
    for (std::size_t k = 0; k < n; ++k) buf[k] = base[k * stride] * in_phase[k];
    fftw_execute_dft(plan, io, io);
    for (std::size_t k = 0; k < n; ++k) base[k * stride] = buf[k] * out_phase[k] * scale;
  }
}

}  // namespace qlcst::detail
