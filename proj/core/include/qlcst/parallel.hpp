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

#include <cstddef>
#include <functional>

namespace qlcst {

/// Worker count: set_thread_limit() if called with n > 0, else QLCST_THREADS if set and > 0,
/// else std::thread::hardware_concurrency().
unsigned thread_count() noexcept;

/// 0 restores the environment/auto behaviour.
void set_thread_limit(unsigned n) noexcept;

/// Calls body(i) for i in [0, n) split into contiguous blocks across thread_count() workers.
/// Each index is handled by exactly one call, so per-index results do not depend on the
/// worker count. The first exception thrown by a body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qlcst
