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

#include "qlcst/window.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "qlcst/errors.hpp"
#include "qlcst/io.hpp"
#include "qlcst/lct_kernel.hpp"

namespace qlcst {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double gauss_factor(double x, double sigma) { return std::exp(-0.5 * x * x / (sigma * sigma)) / (kSqrt2Pi * sigma); }

double s_factor(double x, double w) {
  if (w == 0.0) throw Error(ErrorKind::ZeroFrequency, "S-window is undefined at w = 0");
  return std::abs(w) / kSqrt2Pi * std::exp(-0.5 * x * x * w * w);
}

Quaternion table_eval(const QSignal2D& t, double x1, double x2) {
  const Grid1D& g1 = t.grid().axis1;
  const Grid1D& g2 = t.grid().axis2;
  const double t1 = (x1 - g1.origin) / g1.spacing;
  const double t2 = (x2 - g2.origin) / g2.spacing;
  const double last1 = static_cast<double>(g1.n - 1);
  const double last2 = static_cast<double>(g2.n - 1);
  if (!(t1 >= 0.0 && t1 <= last1 && t2 >= 0.0 && t2 <= last2)) return {};
  auto i1 = static_cast<std::size_t>(std::floor(t1));
  auto i2 = static_cast<std::size_t>(std::floor(t2));
  if (g1.n == 1) i1 = 0;
  if (g2.n == 1) i2 = 0;
  if (i1 + 1 >= g1.n) i1 = g1.n >= 2 ? g1.n - 2 : 0;
  if (i2 + 1 >= g2.n) i2 = g2.n >= 2 ? g2.n - 2 : 0;
  const double f1 = g1.n == 1 ? 0.0 : t1 - static_cast<double>(i1);
  const double f2 = g2.n == 1 ? 0.0 : t2 - static_cast<double>(i2);
  const std::size_t j1 = g1.n == 1 ? i1 : i1 + 1;
  const std::size_t j2 = g2.n == 1 ? i2 : i2 + 1;
  return t.at(i1, i2) * ((1 - f1) * (1 - f2)) + t.at(j1, i2) * (f1 * (1 - f2)) + t.at(i1, j2) * ((1 - f1) * f2) +
         t.at(j1, j2) * (f1 * f2);
}

double parse_number(std::string_view tok, std::string_view context) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::BadParameter, "cannot parse window \"" + std::string(context) + "\"");
  }
  return v;
}

}  // namespace

WindowSpec WindowSpec::fixed_gaussian(double sigma1, double sigma2) {
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0) || !std::isfinite(sigma1) || !std::isfinite(sigma2)) {
    throw Error(ErrorKind::BadParameter, "Gaussian window widths must be positive");
  }
  return WindowSpec(FixedGaussian{sigma1, sigma2});
}

WindowSpec WindowSpec::constant(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::BadParameter, "constant window value must be finite");
  return WindowSpec(ConstantWindow{value});
}

WindowSpec WindowSpec::parse(std::string_view text) {
  if (text.starts_with("reflect:")) return parse(text.substr(8)).reflect();
  if (text == "s-gauss") return s_gaussian();
  if (text.starts_with("fixed-gauss:")) {
    const std::string_view args = text.substr(12);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      const double s = parse_number(args, text);
      return fixed_gaussian(s, s);
    }
    return fixed_gaussian(parse_number(args.substr(0, comma), text), parse_number(args.substr(comma + 1), text));
  }
  if (text.starts_with("constant:")) return constant(parse_number(text.substr(9), text));
  if (text.starts_with("table:")) {
    const std::string path(text.substr(6));
    return WindowSpec(TableWindow{read_signal(path), path});
  }
  throw Error(ErrorKind::BadParameter,
              "unknown window \"" + std::string(text) + "\" (fixed-gauss:s1,s2 | s-gauss | table:PATH | constant:VALUE)");
}

WindowSpec WindowSpec::reflect() const {
  WindowSpec out = *this;
  out.reflected_ = !reflected_;
  return out;
}

Quaternion WindowSpec::eval(double x1, double x2, double w1, double w2) const {
  if (reflected_) {
    x1 = -x1;
    x2 = -x2;
  }
  return std::visit(Overloaded{
                        [&](const FixedGaussian& g) {
                          return Quaternion(gauss_factor(x1, g.sigma1) * gauss_factor(x2, g.sigma2));
                        },
                        [&](const SGaussian&) { return Quaternion(s_factor(x1, w1) * s_factor(x2, w2)); },
                        [&](const TableWindow& t) { return table_eval(t.table, x1, x2); },
                        [&](const FrequencyOnlyWindow& f) { return Quaternion(f.gamma(w1, w2)); },
                        [&](const ConstantWindow& c) { return Quaternion(c.value); },
                    },
                    family_);
}

bool WindowSpec::depends_on_w() const noexcept {
  return std::holds_alternative<SGaussian>(family_) || std::holds_alternative<FrequencyOnlyWindow>(family_);
}

bool WindowSpec::depends_on_x() const noexcept {
  return !std::holds_alternative<FrequencyOnlyWindow>(family_) && !std::holds_alternative<ConstantWindow>(family_);
}

bool WindowSpec::is_real() const noexcept {
  if (const auto* t = std::get_if<TableWindow>(&family_)) {
    for (const auto& q : t->table.samples()) {
      if (q.x != 0.0 || q.y != 0.0 || q.z != 0.0) return false;
    }
  }
  return true;
}

std::optional<WindowSpec::Factors> WindowSpec::separable_factors() const {
  const double sign = reflected_ ? -1.0 : 1.0;
  if (const auto* g = std::get_if<FixedGaussian>(&family_)) {
    const double s1 = g->sigma1;
    const double s2 = g->sigma2;
    return Factors{[s1, sign](double x, double) { return gauss_factor(sign * x, s1); },
                   [s2, sign](double x, double) { return gauss_factor(sign * x, s2); }};
  }
  if (std::holds_alternative<SGaussian>(family_)) {
    return Factors{[sign](double x, double w) { return s_factor(sign * x, w); },
                   [sign](double x, double w) { return s_factor(sign * x, w); }};
  }
  return std::nullopt;
}

std::string WindowSpec::describe() const {
  std::string base = std::visit(Overloaded{
                                    [](const FixedGaussian& g) {
                                      char buf[80];
                                      std::snprintf(buf, sizeof buf, "fixed-gauss:%.17g,%.17g", g.sigma1, g.sigma2);
                                      return std::string(buf);
                                    },
                                    [](const SGaussian&) { return std::string("s-gauss"); },
                                    [](const TableWindow& t) { return t.source.empty() ? std::string() : "table:" + t.source; },
                                    [](const FrequencyOnlyWindow&) { return std::string(); },
                                    [](const ConstantWindow& c) {
                                      char buf[48];
                                      std::snprintf(buf, sizeof buf, "constant:%.17g", c.value);
                                      return std::string(buf);
                                    },
                                },
                                family_);
  if (base.empty()) return base;
  return reflected_ ? "reflect:" + base : base;
}

Quaternion window_eval(const WindowSpec& spec, double x1, double x2, double w1, double w2) {
  return spec.eval(x1, x2, w1, w2);
}

Admissibility lambda_psi(const WindowSpec& spec, double w1, double w2) {
  if (!spec.depends_on_x()) {
    throw Error(ErrorKind::AdmissibilityError, "a window independent of x is not square integrable");
  }
  double sum = 0.0;
  if (const auto* t = std::get_if<TableWindow>(&spec.family())) {
    for (const auto& q : t->table.samples()) sum += norm2(q);
    sum *= t->table.grid().cell();
  } else {
    double s1 = 1.0;
    double s2 = 1.0;
    if (const auto* g = std::get_if<FixedGaussian>(&spec.family())) {
      s1 = g->sigma1;
      s2 = g->sigma2;
    } else {
      if (w1 == 0.0 || w2 == 0.0) throw Error(ErrorKind::ZeroFrequency, "S-window is undefined at w = 0");
      s1 = 1.0 / std::abs(w1);
      s2 = 1.0 / std::abs(w2);
    }
    // Spacing σ/8 over ±12σ: the Riemann sum of a Gaussian is exact to rounding there.
    const Grid1D g1{193, -12.0 * s1, s1 / 8.0};
    const Grid1D g2{193, -12.0 * s2, s2 / 8.0};
    for (std::size_t i = 0; i < g1.n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < g2.n; ++j) row += norm2(spec.eval(g1.at(i), g2.at(j), w1, w2));
      sum += row;
    }
    sum *= g1.spacing * g2.spacing;
  }
  if (sum == 0.0) throw Error(ErrorKind::ZeroWindow, "window vanishes on its quadrature grid");
  if (!std::isfinite(sum)) throw Error(ErrorKind::AdmissibilityError, "window energy is not finite");
  return {sum, spec.depends_on_w()};
}

double lambda_constant(const WindowSpec& spec) {
  if (spec.depends_on_w()) {
    throw Error(ErrorKind::AdmissibilityError, "admissibility constant depends on w for this window");
  }
  return lambda_psi(spec, 1.0, 1.0).lambda;
}

}  // namespace qlcst
