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

#include "qlcst/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "qlcst/errors.hpp"
#include "qlcst/generators.hpp"
#include "qlcst/qlct.hpp"
#include "qlcst/stransform.hpp"
#include "qlcst/uncertainty.hpp"

namespace qlcst {

bool SuiteReport::passed() const noexcept {
  for (const auto& r : rows) {
    if (!r.passed) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct MatrixCase {
  std::string name;
  ParamMatrix m1;
  ParamMatrix m2;
};

struct SignalCase {
  std::string name;
  std::function<QSignal2D(const Grid2D&)> make;
};

std::vector<MatrixCase> matrix_cases(const VerifyOptions& o) {
  if (o.m1 && o.m2) return {{"custom", *o.m1, *o.m2}};
  if (o.m1 || o.m2) throw Error(ErrorKind::BadParameter, "give both m1 and m2 or neither");
  const auto f = special_case_matrix({SpecialCase::Kind::Stockwell, 0.0});
  const auto r = special_case_matrix({SpecialCase::Kind::Fractional, kPi / 3.0});
  const auto z = special_case_matrix({SpecialCase::Kind::Fresnel, 2.0});
  return {{"fourier", f.first, f.second}, {"fractional(pi/3)", r.first, r.second}, {"fresnel(B=2)", z.first, z.second}};
}

SignalCase generated(GeneratorSpec spec) {
  return {spec.label(), [spec](const Grid2D& g) { return gen_signal(spec, g); }};
}

GeneratorSpec make_spec(GeneratorSpec::Kind kind, bool normalize) {
  GeneratorSpec s;
  s.kind = kind;
  s.normalize = normalize;
  return s;
}

std::vector<SignalCase> battery(const VerifyOptions& o, const std::vector<GeneratorSpec>& defaults) {
  if (o.signal) {
    const QSignal2D f = *o.signal;
    return {{"input", [f](const Grid2D&) { return f; }}};
  }
  std::vector<SignalCase> out;
  for (const auto& s : defaults) out.push_back(generated(s));
  return out;
}

std::vector<GeneratorSpec> uncertainty_battery(bool normalize, std::uint64_t seed) {
  using K = GeneratorSpec::Kind;
  std::vector<GeneratorSpec> specs;
  specs.push_back(make_spec(K::Gaussian, normalize));
  GeneratorSpec shifted = make_spec(K::ShiftedGaussian, normalize);
  shifted.center1 = 1.0;
  shifted.center2 = -0.5;
  specs.push_back(shifted);
  for (double a : {0.5, 2.0}) {
    GeneratorSpec d = make_spec(K::DilatedGaussian, normalize);
    d.scale = a;
    specs.push_back(d);
  }
  for (auto [n1, n2] : {std::pair{1, 0}, std::pair{2, 1}}) {
    GeneratorSpec h = make_spec(K::Hermite, normalize);
    h.order1 = n1;
    h.order2 = n2;
    specs.push_back(h);
  }
  GeneratorSpec rh = make_spec(K::RandomHermite, normalize);
  rh.seed = seed;
  specs.push_back(rh);
  return specs;
}

std::vector<int> axes(const VerifyOptions& o) {
  if (o.axis == 0) return {1, 2};
  if (o.axis != 1 && o.axis != 2) throw Error(ErrorKind::BadAxis, "axis must be 0, 1 or 2");
  return {o.axis};
}

Grid2D signal_grid(const VerifyOptions& o, std::size_t default_n) {
  return square(midpoint_grid(o.n ? o.n : default_n, o.extent));
}

Grid2D grid_for(const VerifyOptions& o, std::size_t default_n) {
  return o.signal ? o.signal->grid() : signal_grid(o, default_n);
}

std::string describe(const Grid2D& g) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zux%zu d=%.4g,%.4g", g.axis1.n, g.axis2.n, g.axis1.spacing, g.axis2.spacing);
  return buf;
}

std::string describe(const Grid2D& u, const Grid2D& w) { return "u " + describe(u) + " w " + describe(w); }

WindowSpec window_or(const VerifyOptions& o, WindowSpec fallback) { return o.window ? *o.window : std::move(fallback); }

ReportRow below(std::string name, double value, double threshold, std::string grid) {
  ReportRow r;
  r.name = std::move(name);
  r.value = value;
  r.grid = std::move(grid);
  r.relation = "<";
  r.threshold = threshold;
  r.passed = std::isfinite(value) && value < threshold;
  return r;
}

ReportRow at_least(std::string name, double value, double threshold, std::string grid) {
  ReportRow r = below(std::move(name), value, threshold, std::move(grid));
  r.relation = ">=";
  r.passed = std::isfinite(value) && value >= threshold;
  return r;
}

ReportRow report_only(std::string name, double value, std::string grid) {
  ReportRow r = below(std::move(name), value, 0.0, std::move(grid));
  r.relation = "report";
  r.passed = true;
  return r;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::string& a, const std::string& b) { return a + " / " + b; }

SuiteReport roundtrip(const VerifyOptions& o) {
  using K = GeneratorSpec::Kind;
  GeneratorSpec h = make_spec(K::Hermite, false);
  h.order1 = 2;
  h.order2 = 1;
  GeneratorSpec rh = make_spec(K::RandomHermite, false);
  rh.seed = o.seed;
  SuiteReport rep{"roundtrip", {}};
  const Grid2D x = grid_for(o, 64);
  for (const auto& sc : battery(o, {make_spec(K::Gaussian, false), h, rh})) {
    const QSignal2D f = sc.make(x);
    for (const auto& mc : matrix_cases(o)) {
      const auto t0 = Clock::now();
      const Grid2D u = default_spectral_grid(x, mc.m1, mc.m2);
      const QSignal2D back = qlct_fast_inverse(qlct_fast_forward(f, mc.m1, mc.m2, u), mc.m1, mc.m2, x);
      const double elapsed = seconds_since(t0);
      const std::string name = join(sc.name, mc.name);
      rep.rows.push_back(below(name, relative_l2(back, f), o.tol.roundtrip, describe(x)));
      rep.rows.push_back(below(name + " seconds", elapsed, o.tol.roundtrip_seconds, describe(x)));
    }
  }
  return rep;
}

SuiteReport oracle_equivalence(const VerifyOptions& o) {
  SuiteReport rep{"oracle-equivalence", {}};
  const Grid2D x = grid_for(o, 32);
  std::vector<SignalCase> signals;
  if (o.signal) {
    signals = battery(o, {});
  } else {
    for (std::uint64_t k = 0; k < 20; ++k) {
      GeneratorSpec s = make_spec(GeneratorSpec::Kind::Noise, false);
      s.seed = o.seed + k;
      signals.push_back(generated(s));
    }
  }
  for (const auto& sc : signals) {
    const QSignal2D f = sc.make(x);
    for (const auto& mc : matrix_cases(o)) {
      const Grid2D u = default_spectral_grid(x, mc.m1, mc.m2);
      const QSpectrum2D fast = qlct_fast_forward(f, mc.m1, mc.m2, u);
      const QSpectrum2D direct = qlct_forward(f, mc.m1, mc.m2, u);
      rep.rows.push_back(below(join(sc.name, mc.name), relative_l2(fast, direct), o.tol.oracle, describe(x)));
    }
  }
  return rep;
}

SuiteReport plancherel(const VerifyOptions& o) {
  using K = GeneratorSpec::Kind;
  GeneratorSpec rh = make_spec(K::RandomHermite, false);
  rh.seed = o.seed;
  SuiteReport rep{"plancherel", {}};
  const Grid2D x = grid_for(o, 64);
  for (const auto& sc : battery(o, {make_spec(K::Gaussian, false), rh})) {
    const QSignal2D f = sc.make(x);
    for (const auto& mc : matrix_cases(o)) {
      rep.rows.push_back(below(join(sc.name, mc.name), plancherel_gap(f, mc.m1, mc.m2), o.tol.plancherel, describe(x)));
    }
  }
  return rep;
}

SuiteReport energy(const VerifyOptions& o) {
  SuiteReport rep{"energy", {}};
  const Grid2D x = grid_for(o, 32);
  const WindowSpec window = window_or(o, WindowSpec::fixed_gaussian(1.0, 1.0));
  GeneratorSpec h = make_spec(GeneratorSpec::Kind::Hermite, false);
  h.order1 = 1;
  for (const auto& sc : battery(o, {make_spec(GeneratorSpec::Kind::Gaussian, false), h})) {
    const QSignal2D f = sc.make(x);
    for (const auto& mc : matrix_cases(o)) {
      const Grid2D w = default_spectral_grid(x, mc.m1, mc.m2);
      const QLCSTCoefficients c = qlcst_forward(f, window, mc.m1, mc.m2, x, w);
      ReportRow r = below(join(sc.name, mc.name), energy_identity_gap(c, f), o.tol.energy, describe(x, w));
      r.lhs = c.energy();
      r.rhs = lambda_constant(window) * f.energy();
      rep.rows.push_back(r);
    }
  }
  return rep;
}

SuiteReport reconstruction(const VerifyOptions& o) {
  SuiteReport rep{"reconstruction", {}};
  const Grid2D x = grid_for(o, 32);
  const WindowSpec window = window_or(o, WindowSpec::fixed_gaussian(1.0, 1.0));
  GeneratorSpec h = make_spec(GeneratorSpec::Kind::Hermite, false);
  h.order1 = 1;
  for (const auto& sc : battery(o, {make_spec(GeneratorSpec::Kind::Gaussian, false), h})) {
    const QSignal2D f = sc.make(x);
    for (const auto& mc : matrix_cases(o)) {
      const auto t0 = Clock::now();
      const Grid2D w = default_spectral_grid(x, mc.m1, mc.m2);
      const QSignal2D back = qlcst_reconstruct(qlcst_forward(f, window, mc.m1, mc.m2, x, w), x);
      const double elapsed = seconds_since(t0);
      const std::string name = join(sc.name, mc.name);
      rep.rows.push_back(below(name, relative_l2(back, f), o.tol.reconstruction, describe(x, w)));
      rep.rows.push_back(below(name + " seconds", elapsed, o.tol.reconstruction_seconds, describe(x, w)));
    }
  }
  return rep;
}

// The s-window at frequency w has spatial width 1/|w|, so the u sum needs to cover several widths
// at the smallest |w| on the grid.
SuiteReport marginal(const VerifyOptions& o) {
  SuiteReport rep{"marginal", {}};
  const Grid2D x = grid_for(o, 32);
  const WindowSpec window = window_or(o, WindowSpec::s_gaussian());
  const Grid2D u = square(midpoint_grid(96, 16.0));
  const Grid2D w = square(centered_grid(16, 1.0));
  for (const auto& sc : battery(o, {make_spec(GeneratorSpec::Kind::Gaussian, false)})) {
    const QSignal2D f = sc.make(x);
    for (const auto& mc : matrix_cases(o)) {
      const QLCSTCoefficients c = qlcst_forward(f, window, mc.m1, mc.m2, u, w);
      rep.rows.push_back(
          below(join(sc.name, mc.name), marginal_qlct_gap(c, f, mc.m1, mc.m2), o.tol.marginal, describe(u, w)));
    }
  }
  return rep;
}

SuiteReport covariance(const VerifyOptions& o) {
  SuiteReport rep{"covariance", {}};
  const Grid2D x = signal_grid(o, 48);
  const WindowSpec window = window_or(o, WindowSpec::fixed_gaussian(1.0, 1.0));
  std::function<Quaternion(double, double)> fn = [](double x1, double x2) {
    return Quaternion(std::exp(-(x1 * x1 + x2 * x2) / 2.0), 0.3 * std::exp(-(x1 * x1 + 2.0 * x2 * x2) / 2.0), 0.0,
                      0.2 * std::exp(-(2.0 * x1 * x1 + x2 * x2) / 2.0));
  };
  // The two modulation readings coincide when A = D, so the sweep adds a matrix with A ≠ D.
  std::vector<MatrixCase> cases = matrix_cases(o);
  if (!(o.m1 && o.m2)) {
    const ParamMatrix g = ParamMatrix::validate(0.5, 1.0, -0.5, 1.0, "general(0.5,1,-0.5,1)");
    cases.push_back({"general(0.5,1,-0.5,1)", g, g});
  }
  for (const auto& mc : cases) {
    const CovarianceReport c = covariance_residuals(fn, x, window, mc.m1, mc.m2, {0.5, -0.25}, {0.3, 0.2});
    const std::string g = describe(x);
    rep.rows.push_back(below(join("parity", mc.name), c.parity, o.tol.parity, g));
    rep.rows.push_back(below(join("shift", mc.name), c.shift, o.tol.shift, g));
    rep.rows.push_back(report_only(join("modulation ordered", mc.name), c.modulation_ordered, g));
    rep.rows.push_back(report_only(join("modulation swapped", mc.name), c.modulation_swapped, g));
    rep.rows.push_back(below(join("modulation best reading", mc.name),
                             std::min(c.modulation_ordered, c.modulation_swapped), o.tol.modulation, g));
  }
  return rep;
}

SuiteReport heisenberg(const VerifyOptions& o) {
  SuiteReport rep{"heisenberg", {}};
  const WindowSpec window = window_or(o, WindowSpec::fixed_gaussian(1.0, 1.0));
  const std::size_t n = o.n ? o.n : 32;
  for (const auto& sc : battery(o, uncertainty_battery(false, o.seed))) {
    const QSignal2D f = sc.make(grid_for(o, n));
    const bool refine = !o.signal;
    const QSignal2D fine = refine ? sc.make(signal_grid(o, 2 * n)) : QSignal2D{};
    for (const auto& mc : matrix_cases(o)) {
      for (int axis : axes(o)) {
        const DispersionReport d = heisenberg_report(f, window, mc.m1, mc.m2, axis);
        const double eps = refine ? std::abs(heisenberg_report(fine, window, mc.m1, mc.m2, axis).ratio - d.ratio) : 0.0;
        const std::string name = join(sc.name, mc.name);
        ReportRow r = at_least(name, d.ratio, o.tol.heisenberg_ratio, describe(f.grid()));
        r.axis = axis;
        r.lhs = d.lhs;
        r.rhs = d.rhs;
        r.eps_disc = eps;
        rep.rows.push_back(r);
        if (!o.signal && sc.name.rfind("gaussian(", 0) == 0) {
          ReportRow strict = r;
          strict.name = name + " strict";
          strict.relation = ">";
          strict.threshold = 1.0;
          strict.passed = d.ratio > 1.0;
          rep.rows.push_back(strict);
        }
      }
    }
  }
  return rep;
}

// ψ(1/2) = ψ(1) + Σ_k (1/(k+1) − 1/(k+1/2)), with ψ(1) = −γ and γ from harmonic partial sums.
// Both sums are truncated at K and closed with Euler–Maclaurin tails.
double digamma_half_by_series() {
  const int kTerms = 20000;
  double harmonic = 0.0;
  for (int k = kTerms; k >= 1; --k) harmonic += 1.0 / k;
  const double n = kTerms;
  const double gamma = harmonic - std::log(n) - 1.0 / (2 * n) + 1.0 / (12 * n * n) - 1.0 / (120 * n * n * n * n);
  double diff = 0.0;
  for (int k = kTerms - 1; k >= 0; --k) diff += 1.0 / (k + 1.0) - 1.0 / (k + 0.5);
  // Σ_{k≥K} 1/((k+1)(k+1/2))·(−1/2) with g(k) = 1/((k+1)(k+1/2)):
  // Σ_{k≥K} g(k) ≈ ∫_K^∞ g + g(K)/2 − g'(K)/12.
  const double integral = 2.0 * std::log((n + 1.0) / (n + 0.5));
  const double g = 1.0 / ((n + 1.0) * (n + 0.5));
  const double dg = -g * (1.0 / (n + 1.0) + 1.0 / (n + 0.5));
  diff += -0.5 * (integral + g / 2.0 - dg / 12.0);
  return -gamma + diff;
}

SuiteReport log_uncertainty(const VerifyOptions& o) {
  SuiteReport rep{"log-uncertainty", {}};
  const double oracle = digamma_half_by_series() - std::log(2.0);
  ReportRow d = below("digamma constant vs series", std::abs(digamma_constant() - oracle), o.tol.digamma, "-");
  d.lhs = digamma_constant();
  d.rhs = oracle;
  rep.rows.push_back(d);

  const WindowSpec window = window_or(o, WindowSpec::fixed_gaussian(1.0, 1.0));
  const std::size_t n = o.n ? o.n : 32;
  for (const auto& sc : battery(o, uncertainty_battery(true, o.seed))) {
    const QSignal2D f = sc.make(grid_for(o, n));
    for (const auto& mc : matrix_cases(o)) {
      const LogUncertaintyReport l = log_uncertainty_report(f, window, mc.m1, mc.m2);
      double eps = 0.0;
      if (!o.signal) {
        eps = std::abs(log_uncertainty_report(sc.make(signal_grid(o, 2 * n)), window, mc.m1, mc.m2).gap - l.gap);
      }
      ReportRow r = at_least(join(sc.name, mc.name), l.gap, o.tol.log_gap, describe(f.grid()));
      r.lhs = l.spectral_log + l.spatial_log;
      r.rhs = l.bound;
      r.eps_disc = eps;
      rep.rows.push_back(r);
    }
  }
  return rep;
}

SuiteReport lemma41(const VerifyOptions& o) {
  SuiteReport rep{"lemma41", {}};
  const WindowSpec window = window_or(o, WindowSpec::fixed_gaussian(1.0, 1.0));
  const Grid2D x = grid_for(o, 24);
  GeneratorSpec narrow = make_spec(GeneratorSpec::Kind::Gaussian, false);
  narrow.sigma = 0.5;
  std::vector<std::pair<SignalCase, double>> signals;
  if (o.signal) {
    signals.emplace_back(battery(o, {}).front(), o.tol.lemma41);
  } else {
    signals.emplace_back(generated(make_spec(GeneratorSpec::Kind::Gaussian, false)), o.tol.lemma41);
    signals.emplace_back(generated(narrow), o.tol.lemma41_narrow);
  }
  for (const auto& [sc, threshold] : signals) {
    const QSignal2D f = sc.make(x);
    for (const auto& mc : matrix_cases(o)) {
      for (int axis : axes(o)) {
        ReportRow r = below(join(sc.name, mc.name), lemma_41_gap(f, window, mc.m1, mc.m2, axis), threshold, describe(x));
        r.axis = axis;
        rep.rows.push_back(r);
      }
    }
  }
  return rep;
}

SuiteReport orthogonality(const VerifyOptions& o) {
  SuiteReport rep{"orthogonality", {}};
  const WindowSpec window = window_or(o, WindowSpec::fixed_gaussian(1.0, 1.0));
  const Grid2D x = grid_for(o, 32);
  GeneratorSpec h10 = make_spec(GeneratorSpec::Kind::Hermite, false);
  h10.order1 = 1;
  GeneratorSpec chirp = make_spec(GeneratorSpec::Kind::Chirp, false);
  chirp.rate = 0.25;
  const QSignal2D f = o.signal ? *o.signal : gen_signal(make_spec(GeneratorSpec::Kind::Gaussian, false), x);
  std::vector<std::pair<std::string, QSignal2D>> partners = {
      {"self", f}, {h10.label(), gen_signal(h10, x)}, {chirp.label(), gen_signal(chirp, x)}};
  for (const auto& mc : matrix_cases(o)) {
    const Grid2D w = default_spectral_grid(x, mc.m1, mc.m2);
    const QLCSTCoefficients cf = qlcst_forward(f, window, mc.m1, mc.m2, x, w);
    const double lambda = lambda_constant(window);
    for (const auto& [name, g] : partners) {
      const QLCSTCoefficients cg = qlcst_forward(g, window, mc.m1, mc.m2, x, w);
      const Quaternion lhs = orthogonality_form(cf, cg);
      Quaternion inner;
      for (std::size_t k = 0; k < f.samples().size(); ++k) inner += f.samples()[k] * conj(g.samples()[k]);
      const Quaternion rhs = inner * (lambda * x.cell());
      const double scale = std::max(abs(rhs), lambda * std::sqrt(f.energy() * g.energy()));
      const double residual = abs(lhs - rhs) / scale;
      const std::string label = join("f=" + std::string(o.signal ? "input" : "gaussian") + ", g=" + name, mc.name);
      ReportRow r = name == "self" ? below(label, residual, o.tol.energy, describe(x, w)) : report_only(label, residual, describe(x, w));
      r.lhs = lhs.w;
      r.rhs = rhs.w;
      rep.rows.push_back(r);
    }
  }
  return rep;
}

// Independent quaternion S-transform: (1/2π) e^{−μ1π/4} Σ e^{−μ1x1w1} f Ψ̄ e^{−μ2x2w2} Δx e^{−μ2π/4}.
QLCSTCoefficients quaternion_s_transform(const QSignal2D& f, const Grid2D& u, const Grid2D& w,
                                         const ParamMatrix& m) {
  QLCSTCoefficients c(u, w, WindowSpec::s_gaussian(), m, m);
  const Grid2D& x = f.grid();
  const Quaternion left = exp_axis(Axis::Mu1, -kPi / 4.0);
  const Quaternion right = exp_axis(Axis::Mu2, -kPi / 4.0);
  for (std::size_t a = 0; a < u.axis1.n; ++a)
    for (std::size_t b = 0; b < u.axis2.n; ++b)
      for (std::size_t j1 = 0; j1 < w.axis1.n; ++j1)
        for (std::size_t j2 = 0; j2 < w.axis2.n; ++j2) {
          const double w1 = w.axis1.at(j1);
          const double w2 = w.axis2.at(j2);
          Quaternion acc;
          for (std::size_t i1 = 0; i1 < x.axis1.n; ++i1) {
            for (std::size_t i2 = 0; i2 < x.axis2.n; ++i2) {
              const double x1 = x.axis1.at(i1);
              const double x2 = x.axis2.at(i2);
              const double psi = std::abs(w1 * w2) / (2.0 * kPi) *
                                 std::exp(-((u.axis1.at(a) - x1) * (u.axis1.at(a) - x1) * w1 * w1 +
                                            (u.axis2.at(b) - x2) * (u.axis2.at(b) - x2) * w2 * w2) /
                                          2.0);
              acc += exp_axis(Axis::Mu1, -x1 * w1) * (f.at(i1, i2) * psi) * exp_axis(Axis::Mu2, -x2 * w2);
            }
          }
          c.at(a, b, j1, j2) = left * acc * right * (x.cell() / (2.0 * kPi));
        }
  return c;
}

SuiteReport special_cases(const VerifyOptions& o) {
  SuiteReport rep{"special-cases", {}};
  auto entries_gap = [](const ParamMatrix& m, double a, double b, double c, double d) {
    return std::max({std::abs(m.a() - a), std::abs(m.b() - b), std::abs(m.c() - c), std::abs(m.d() - d)});
  };
  const double t = kPi / 3.0;
  const auto fr = special_case_matrix({SpecialCase::Kind::Fractional, t});
  const auto fz = special_case_matrix({SpecialCase::Kind::Fresnel, 2.0});
  const auto st = special_case_matrix({SpecialCase::Kind::Stockwell, 0.0});
  rep.rows.push_back(below("fractional(pi/3) matrix", entries_gap(fr.first, std::cos(t), std::sin(t), -std::sin(t), std::cos(t)),
                           o.tol.reduction, "-"));
  rep.rows.push_back(below("fresnel(B=2) matrix", entries_gap(fz.first, 1.0, 2.0, 0.0, 1.0), o.tol.reduction, "-"));
  rep.rows.push_back(below("stockwell matrix", entries_gap(st.first, 0.0, 1.0, -1.0, 0.0), o.tol.reduction, "-"));

  // Stockwell matrices with the s-window against an independent quaternion S-transform.
  {
    const Grid2D x = square(midpoint_grid(12, 4.0));
    const Grid2D u = square(midpoint_grid(6, 3.0));
    const Grid2D w = square(centered_grid(8, 0.75));
    GeneratorSpec rh = make_spec(GeneratorSpec::Kind::RandomHermite, false);
    rh.seed = o.seed;
    rh.max_order = 2;
    const QSignal2D f = gen_signal(rh, x);
    const QLCSTCoefficients c = qlcst_forward(f, WindowSpec::s_gaussian(), st.first, st.second, u, w);
    const QLCSTCoefficients q = quaternion_s_transform(f, u, w, st.first);
    rep.rows.push_back(below("stockwell vs quaternion S-transform", relative_l2(c.data(), q.data()), o.tol.reduction,
                             describe(u, w)));
  }

  // Ψ ≡ 1: every u slice equals the QLCT.
  {
    const Grid2D x = grid_for(o, 16);
    GeneratorSpec rh = make_spec(GeneratorSpec::Kind::RandomHermite, false);
    rh.seed = o.seed;
    const QSignal2D f = o.signal ? *o.signal : gen_signal(rh, x);
    for (const auto& mc : matrix_cases(o)) {
      const Grid2D w = default_spectral_grid(x, mc.m1, mc.m2);
      const Grid2D u = square(midpoint_grid(4, 2.0));
      const QLCSTCoefficients c = qlcst_forward(f, WindowSpec::constant(1.0), mc.m1, mc.m2, u, w);
      const QSpectrum2D l = qlct_auto_forward(f, mc.m1, mc.m2, w);
      double worst = 0.0;
      for (std::size_t a = 0; a < u.axis1.n; ++a)
        for (std::size_t b = 0; b < u.axis2.n; ++b) worst = std::max(worst, relative_l2(c.slice(a, b), l));
      rep.rows.push_back(below(join("constant window vs qlct", mc.name), worst, o.tol.reduction, describe(u, w)));

      // Real Γ(w) depending on w only factors out of the transform.
      const auto gamma = [](double w1, double w2) { return 1.0 / (1.0 + w1 * w1 + 0.5 * w2 * w2); };
      const Grid2D xs = square(midpoint_grid(10, 4.0));
      const QSignal2D fs = gen_signal(make_spec(GeneratorSpec::Kind::Gaussian, false), xs);
      const Grid2D ws = default_spectral_grid(xs, mc.m1, mc.m2);
      const Grid2D us = square(midpoint_grid(2, 1.0));
      const QLCSTCoefficients g = qlcst_forward(fs, WindowSpec(FrequencyOnlyWindow{gamma, "gamma"}), mc.m1, mc.m2, us, ws);
      const QSpectrum2D ls = qlct_forward(fs, mc.m1, mc.m2, ws);
      std::vector<Quaternion> expect;
      for (std::size_t a = 0; a < us.size(); ++a) {
        for (std::size_t j1 = 0; j1 < ws.axis1.n; ++j1)
          for (std::size_t j2 = 0; j2 < ws.axis2.n; ++j2)
            expect.push_back(ls.at(j1, j2) * gamma(ws.axis1.at(j1), ws.axis2.at(j2)));
      }
      rep.rows.push_back(below(join("frequency-only window vs gamma*qlct", mc.name), relative_l2(g.data(), expect),
                               o.tol.reduction, describe(us, ws)));
    }
  }
  return rep;
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"roundtrip", roundtrip},
      {"oracle-equivalence", oracle_equivalence},
      {"plancherel", plancherel},
      {"energy", energy},
      {"reconstruction", reconstruction},
      {"marginal", marginal},
      {"covariance", covariance},
      {"heisenberg", heisenberg},
      {"log-uncertainty", log_uncertainty},
      {"lemma41", lemma41},
      {"orthogonality", orthogonality},
      {"special-cases", special_cases},
  };
  return suites;
}

std::string format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(std::string_view suite, const VerifyOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name == suite) return fn(options);
  }
  throw Error(ErrorKind::BadParameter, "unknown suite \"" + std::string(suite) + "\"");
}

void write_csv(std::ostream& os, const SuiteReport& report, bool header) {
  if (header) os << "case,axis,lhs,rhs,value,grid,eps_disc,relation,threshold,pass\n";
  for (const auto& r : report.rows) {
    os << csv_field(report.suite + ": " + r.name) << ',' << r.axis << ',' << format(r.lhs) << ',' << format(r.rhs)
       << ',' << format(r.value) << ',' << csv_field(r.grid) << ',' << format(r.eps_disc) << ',' << r.relation << ','
       << format(r.threshold) << ',' << (r.passed ? "pass" : "FAIL") << '\n';
  }
}

void write_text(std::ostream& os, const SuiteReport& report) {
  for (const auto& r : report.rows) {
    char line[512];
    if (r.relation == "report") {
      std::snprintf(line, sizeof line, "[info] %s: %s%s value=%.6e (grid %s)", report.suite.c_str(), r.name.c_str(),
                    r.axis ? (" axis " + std::to_string(r.axis)).c_str() : "", r.value, r.grid.c_str());
    } else {
      std::snprintf(line, sizeof line, "[%s] %s: %s%s value=%.6e %s %.3g eps_disc=%.2e (grid %s)",
                    r.passed ? "pass" : "FAIL", report.suite.c_str(), r.name.c_str(),
                    r.axis ? (" axis " + std::to_string(r.axis)).c_str() : "", r.value, r.relation.c_str(),
                    r.threshold, r.eps_disc, r.grid.c_str());
    }
    os << line << '\n';
  }
  os << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace qlcst
