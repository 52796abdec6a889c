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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlcst/grid.hpp"
#include "qlcst/lct_kernel.hpp"
#include "qlcst/window.hpp"

namespace qlcst {

/// Pass thresholds for every suite. Defaults are the acceptance tolerances.
struct Tolerances {
  double roundtrip = 1e-6;
  double roundtrip_seconds = 30.0;
  double oracle = 1e-8;
  double plancherel = 1e-6;
  double energy = 1e-3;
  double reconstruction = 1e-3;
  double reconstruction_seconds = 300.0;
  double marginal = 1e-3;
  double parity = 1e-10;
  double shift = 1e-3;
  double modulation = 1e-2;
  double heisenberg_ratio = 0.98;
  double log_gap = -0.02;
  double digamma = 1e-10;
  double lemma41 = 5e-3;
  double lemma41_narrow = 1e-2;
  double reduction = 1e-10;
};

struct VerifyOptions {
  /// When set, the suite runs on this signal only instead of its built-in battery.
  std::optional<QSignal2D> signal;
  /// When both are set, they replace the Fourier / fractional(π/3) / Fresnel(2) sweep.
  std::optional<ParamMatrix> m1;
  std::optional<ParamMatrix> m2;
  std::optional<WindowSpec> window;
  int axis = 0;        // 0 = both axes
  std::size_t n = 0;   // 0 = suite default
  double extent = 8.0;
  std::uint64_t seed = 20240601;
  Tolerances tol;
};

/// One line of a verification report.
struct ReportRow {
  std::string name;
  int axis = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double value = 0.0;  // residual, gap or ratio
  std::string grid;
  double eps_disc = 0.0;
  std::string relation;  // "<", ">=", or "report" for rows that are not asserted
  double threshold = 0.0;
  bool passed = true;
};

struct SuiteReport {
  std::string suite;
  std::vector<ReportRow> rows;

  bool passed() const noexcept;
};

std::vector<std::string> suite_names();

/// Throws BadParameter for an unknown suite.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& options);

/// "case,axis,lhs,rhs,value,grid,eps_disc,relation,threshold,pass" with 17 significant digits.
void write_csv(std::ostream& os, const SuiteReport& report, bool header = true);
void write_text(std::ostream& os, const SuiteReport& report);

}  // namespace qlcst
