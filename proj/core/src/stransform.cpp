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

#include "qlcst/stransform.hpp"

#include <cmath>
#include <string>

#include "qlcst/errors.hpp"
#include "qlcst/parallel.hpp"
#include "qlcst/qlct.hpp"

namespace qlcst {

QLCSTCoefficients::QLCSTCoefficients(Grid2D ugrid, Grid2D wgrid, WindowSpec window, ParamMatrix m1, ParamMatrix m2)
    : ugrid_(ugrid), wgrid_(wgrid), window_(std::move(window)), m1_(std::move(m1)), m2_(std::move(m2)) {
  check_grid(ugrid_, "u grid");
  check_grid(wgrid_, "w grid");
  data_.resize(ugrid_.size() * wgrid_.size());
}

QSpectrum2D QLCSTCoefficients::slice(std::size_t iu1, std::size_t iu2) const {
  QSpectrum2D s(wgrid_);
  const std::size_t nw = wgrid_.size();
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(u_index(iu1, iu2) * nw);
  std::copy(begin, begin + static_cast<std::ptrdiff_t>(nw), s.samples().begin());
  return s;
}

void QLCSTCoefficients::set_slice(std::size_t iu1, std::size_t iu2, const QSpectrum2D& s) {
  if (!(s.grid() == wgrid_)) throw Error(ErrorKind::GridMismatch, "slice grid differs from the w grid");
  std::copy(s.samples().begin(), s.samples().end(),
            data_.begin() + static_cast<std::ptrdiff_t>(u_index(iu1, iu2) * wgrid_.size()));
}

double QLCSTCoefficients::energy() const noexcept {
  double e = 0.0;
  for (const auto& q : data_) e += norm2(q);
  return e * ugrid_.cell() * wgrid_.cell();
}

bool QLCSTCoefficients::same_layout(const QLCSTCoefficients& o) const noexcept {
  return ugrid_ == o.ugrid_ && wgrid_ == o.wgrid_ && m1_.same_parameters(o.m1_) && m2_.same_parameters(o.m2_) &&
         window_.describe() == o.window_.describe() && window_.family().index() == o.window_.family().index();
}

namespace {

std::vector<Quaternion> kernel_table(const Grid1D& x, const Grid1D& w, const ParamMatrix& m, Axis axis) {
  std::vector<Quaternion> t(x.n * w.n);
  const KernelSpec spec{m, axis, Direction::Forward};
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t j = 0; j < w.n; ++j) t[i * w.n + j] = kernel_eval(spec, x.at(i), w.at(j));
  }
  return t;
}

QSignal2D windowed(const QSignal2D& f, const WindowSpec& window, double u1, double u2) {
  QSignal2D g(f.grid());
  const Grid2D& x = f.grid();
  for (std::size_t i1 = 0; i1 < x.axis1.n; ++i1) {
    for (std::size_t i2 = 0; i2 < x.axis2.n; ++i2) {
      g.at(i1, i2) = f.at(i1, i2) * conj(window.eval(u1 - x.axis1.at(i1), u2 - x.axis2.at(i2), 0.0, 0.0));
    }
  }
  return g;
}

// The kernels are evaluated on kernel_w while the window sees window_w; they differ only for the
// modulation identity, which shifts the kernel frequency argument.
void compute_direct(QLCSTCoefficients& c, const QSignal2D& f, const Grid2D& kernel_w) {
  const Grid2D& x = f.grid();
  const Grid2D& u = c.ugrid();
  const Grid2D& w = c.wgrid();
  const auto k1 = kernel_table(x.axis1, kernel_w.axis1, c.m1(), Axis::Mu1);
  const auto k2 = kernel_table(x.axis2, kernel_w.axis2, c.m2(), Axis::Mu2);
  const double cell = x.cell();
  parallel_for(u.size(), [&](std::size_t iu) {
    const std::size_t iu1 = iu / u.axis2.n;
    const std::size_t iu2 = iu % u.axis2.n;
    const double u1 = u.axis1.at(iu1);
    const double u2 = u.axis2.at(iu2);
    for (std::size_t j1 = 0; j1 < w.axis1.n; ++j1) {
      for (std::size_t j2 = 0; j2 < w.axis2.n; ++j2) {
        const double w1 = w.axis1.at(j1);
        const double w2 = w.axis2.at(j2);
        Quaternion acc;
        for (std::size_t i1 = 0; i1 < x.axis1.n; ++i1) {
          const Quaternion& kl = k1[i1 * w.axis1.n + j1];
          for (std::size_t i2 = 0; i2 < x.axis2.n; ++i2) {
            const Quaternion psi = conj(c.window().eval(u1 - x.axis1.at(i1), u2 - x.axis2.at(i2), w1, w2));
            acc += ((kl * f.at(i1, i2)) * psi) * k2[i2 * w.axis2.n + j2];
          }
        }
        c.at(iu1, iu2, j1, j2) = acc * cell;
      }
    }
  });
}

void compute_slices(QLCSTCoefficients& c, const QSignal2D& f, const Grid2D& kernel_w) {
  const Grid2D& u = c.ugrid();
  parallel_for(u.size(), [&](std::size_t iu) {
    const std::size_t iu1 = iu / u.axis2.n;
    const std::size_t iu2 = iu % u.axis2.n;
    const QSignal2D g = windowed(f, c.window(), u.axis1.at(iu1), u.axis2.at(iu2));
    QSpectrum2D s = qlct_auto_forward(g, c.m1(), c.m2(), kernel_w);
    c.set_slice(iu1, iu2, QSpectrum2D(c.wgrid(), std::move(s.samples())));
  });
}

// Real product window g1(x1, w1)·g2(x2, w2):
//   H(x1, u2, w2) = Σ_x2 f(x1, x2) g2(u2 − x2, w2) K2(x2, w2) Δx2
//   S(u, w)       = Σ_x1 K1(x1, w1) g1(u1 − x1, w1) H(x1, u2, w2) Δx1
void compute_separable(QLCSTCoefficients& c, const QSignal2D& f, const Grid2D& kernel_w,
                       const WindowSpec::Factors& factors) {
  const Grid2D& x = f.grid();
  const Grid2D& u = c.ugrid();
  const Grid2D& w = c.wgrid();
  const std::size_t nx1 = x.axis1.n, nx2 = x.axis2.n;
  const std::size_t nu1 = u.axis1.n, nu2 = u.axis2.n;
  const std::size_t nw1 = w.axis1.n, nw2 = w.axis2.n;
  const auto k1 = kernel_table(x.axis1, kernel_w.axis1, c.m1(), Axis::Mu1);
  const auto k2 = kernel_table(x.axis2, kernel_w.axis2, c.m2(), Axis::Mu2);

  // g[(iu * nw + jw) * nx + ix]
  auto factor_table = [](const Grid1D& xg, const Grid1D& ug, const Grid1D& wg,
                         const std::function<double(double, double)>& g) {
    std::vector<double> t(ug.n * wg.n * xg.n);
    for (std::size_t iu = 0; iu < ug.n; ++iu) {
      for (std::size_t jw = 0; jw < wg.n; ++jw) {
        for (std::size_t ix = 0; ix < xg.n; ++ix) t[(iu * wg.n + jw) * xg.n + ix] = g(ug.at(iu) - xg.at(ix), wg.at(jw));
      }
    }
    return t;
  };
  const auto g1 = factor_table(x.axis1, u.axis1, w.axis1, factors.axis1);
  const auto g2 = factor_table(x.axis2, u.axis2, w.axis2, factors.axis2);

  std::vector<Quaternion> h(nx1 * nu2 * nw2);
  parallel_for(nx1, [&](std::size_t i1) {
    for (std::size_t iu2 = 0; iu2 < nu2; ++iu2) {
      for (std::size_t j2 = 0; j2 < nw2; ++j2) {
        const double* g = &g2[(iu2 * nw2 + j2) * nx2];
        Quaternion acc;
        for (std::size_t i2 = 0; i2 < nx2; ++i2) acc += (f.at(i1, i2) * g[i2]) * k2[i2 * nw2 + j2];
        h[(i1 * nu2 + iu2) * nw2 + j2] = acc * x.axis2.spacing;
      }
    }
  });
  parallel_for(nu1, [&](std::size_t iu1) {
    for (std::size_t j1 = 0; j1 < nw1; ++j1) {
      const double* g = &g1[(iu1 * nw1 + j1) * nx1];
      for (std::size_t iu2 = 0; iu2 < nu2; ++iu2) {
        for (std::size_t j2 = 0; j2 < nw2; ++j2) {
          Quaternion acc;
          for (std::size_t i1 = 0; i1 < nx1; ++i1) {
            acc += k1[i1 * nw1 + j1] * (h[(i1 * nu2 + iu2) * nw2 + j2] * g[i1]);
          }
          c.at(iu1, iu2, j1, j2) = acc * x.axis1.spacing;
        }
      }
    }
  });
}

QlcstMethod resolve(const WindowSpec& window, QlcstMethod method) {
  if (method == QlcstMethod::Auto) {
    if (!window.depends_on_w()) return QlcstMethod::Slice;
    if (window.separable_factors()) return QlcstMethod::Separable;
    return QlcstMethod::Direct;
  }
  if (method == QlcstMethod::Slice && window.depends_on_w()) {
    throw Error(ErrorKind::BadParameter, "slice evaluation needs a window independent of w");
  }
  if (method == QlcstMethod::Separable && !window.separable_factors()) {
    throw Error(ErrorKind::BadParameter, "separable evaluation needs a real product window");
  }
  return method;
}

QLCSTCoefficients compute(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1, const ParamMatrix& m2,
                          const Grid2D& ugrid, const Grid2D& wgrid, const Grid2D& kernel_w, QlcstMethod method) {
  check_grid(f.grid(), "signal grid");
  if (!(kernel_w.axis1.n == wgrid.axis1.n && kernel_w.axis2.n == wgrid.axis2.n)) {
    throw Error(ErrorKind::GridMismatch, "kernel frequency grid must match the w grid in size");
  }
  QLCSTCoefficients c(ugrid, wgrid, window, m1, m2);
  switch (resolve(window, method)) {
    case QlcstMethod::Slice: compute_slices(c, f, kernel_w); break;
    case QlcstMethod::Separable: compute_separable(c, f, kernel_w, *window.separable_factors()); break;
    default: compute_direct(c, f, kernel_w); break;
  }
  return c;
}


bool symmetric(const Grid1D& g) {
  const double last = g.at(g.n - 1);
  return std::abs(g.origin + last) <= 1e-9 * std::max(1.0, std::abs(last));
}

Grid1D shifted(Grid1D g, double by) {
  g.origin += by;
  return g;
}

}  // namespace

QLCSTCoefficients qlcst_forward(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1,
                                const ParamMatrix& m2, const Grid2D& ugrid, const Grid2D& wgrid, QlcstMethod method) {
  return compute(f, window, m1, m2, ugrid, wgrid, wgrid, method);
}

QLCSTCoefficients qlcst_forward(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1,
                                const ParamMatrix& m2) {
  return qlcst_forward(f, window, m1, m2, f.grid(), default_spectral_grid(f.grid(), m1, m2));
}

QSpectrum2D qlcst_slice(const QSignal2D& f, const WindowSpec& window, const ParamMatrix& m1, const ParamMatrix& m2,
                        double u1, double u2, const Grid2D& wgrid) {
  if (window.depends_on_w()) throw Error(ErrorKind::BadParameter, "slice evaluation needs a window independent of w");
  check_grid(wgrid, "w grid");
  return qlct_auto_forward(windowed(f, window, u1, u2), m1, m2, wgrid);
}

QSignal2D qlcst_pointwise_inverse(const QLCSTCoefficients& c, std::size_t iu1, std::size_t iu2, const Grid2D& xgrid) {
  if (iu1 >= c.ugrid().axis1.n || iu2 >= c.ugrid().axis2.n) {
    throw Error(ErrorKind::GridMismatch, "u index outside the coefficient grid");
  }
  check_grid(xgrid, "signal grid");
  return qlct_auto_inverse(c.slice(iu1, iu2), c.m1(), c.m2(), xgrid);
}

QSignal2D qlcst_reconstruct(const QLCSTCoefficients& c, const Grid2D& xgrid) {
  check_grid(xgrid, "signal grid");
  if (lambda_psi(c.window(), 1.0, 1.0).w_dependent) {
    throw Error(ErrorKind::AdmissibilityError, "reconstruction needs a w-independent admissibility constant");
  }
  const double lambda = lambda_constant(c.window());
  const Grid2D& u = c.ugrid();
  const Grid2D& w = c.wgrid();
  const std::size_t nx1 = xgrid.axis1.n, nx2 = xgrid.axis2.n;
  const std::size_t nw1 = w.axis1.n, nw2 = w.axis2.n;
  const std::size_t nu = u.size();

  const KernelSpec left{c.m1(), Axis::Mu1, Direction::Inverse};
  std::vector<Quaternion> k1(nx1 * nw1);
  for (std::size_t i = 0; i < nx1; ++i) {
    for (std::size_t j = 0; j < nw1; ++j) k1[i * nw1 + j] = kernel_eval(left, xgrid.axis1.at(i), w.axis1.at(j));
  }
  // K^{−μ2}(x2, w2) = r − s·μ2 with real r, s.
  std::vector<double> r(nx2 * nw2);
  std::vector<double> s(nx2 * nw2);
  const KernelSpec right{c.m2(), Axis::Mu2, Direction::Inverse};
  for (std::size_t i = 0; i < nx2; ++i) {
    for (std::size_t j = 0; j < nw2; ++j) {
      const Quaternion k = kernel_eval(right, xgrid.axis2.at(i), w.axis2.at(j));
      r[i * nw2 + j] = k.w;
      s[i * nw2 + j] = -k.y;
    }
  }

  // t[(iu * nx1 + i1) * nw2 + j2] = Σ_w1 K^{−μ1}(x1, w1) S(u, w1, w2) Δw1
  std::vector<Quaternion> t(nu * nx1 * nw2);
  parallel_for(nu, [&](std::size_t iu) {
    const std::size_t iu1 = iu / u.axis2.n;
    const std::size_t iu2 = iu % u.axis2.n;
    for (std::size_t i1 = 0; i1 < nx1; ++i1) {
      for (std::size_t j2 = 0; j2 < nw2; ++j2) {
        Quaternion acc;
        for (std::size_t j1 = 0; j1 < nw1; ++j1) acc += k1[i1 * nw1 + j1] * c.at(iu1, iu2, j1, j2);
        t[(iu * nx1 + i1) * nw2 + j2] = acc * w.axis1.spacing;
      }
    }
  });

  // Σ_w2 T·Ψ·(r − s μ2) = (Σ r T)·Ψ − (Σ s T)·Ψ·μ2, with Ψ = Ψ(u − x) fixed inside the w2 sum.
  QSignal2D out(xgrid);
  const double scale = w.axis2.spacing * u.cell() / lambda;
  parallel_for(nx1, [&](std::size_t i1) {
    for (std::size_t i2 = 0; i2 < nx2; ++i2) {
      Quaternion acc;
      for (std::size_t iu = 0; iu < nu; ++iu) {
        const double u1 = u.axis1.at(iu / u.axis2.n);
        const double u2 = u.axis2.at(iu % u.axis2.n);
        const Quaternion psi = c.window().eval(u1 - xgrid.axis1.at(i1), u2 - xgrid.axis2.at(i2), 0.0, 0.0);
        if (psi == Quaternion{}) continue;
        Quaternion a;
        Quaternion b;
        const Quaternion* row = &t[(iu * nx1 + i1) * nw2];
        for (std::size_t j2 = 0; j2 < nw2; ++j2) {
          a += row[j2] * r[i2 * nw2 + j2];
          b += row[j2] * s[i2 * nw2 + j2];
        }
        acc += a * psi - (b * psi) * kMu2;
      }
      out.at(i1, i2) = acc * scale;
    }
  });
  return out;
}

QSignal2D qlcst_reconstruct(const QLCSTCoefficients& c) { return qlcst_reconstruct(c, c.ugrid()); }

Quaternion orthogonality_form(const QLCSTCoefficients& cf, const QLCSTCoefficients& cg) {
  if (!cf.same_layout(cg)) throw Error(ErrorKind::GridMismatch, "coefficients differ in grids, window or matrices");
  Quaternion acc;
  for (std::size_t k = 0; k < cf.data().size(); ++k) acc += cf.data()[k] * conj(cg.data()[k]);
  return acc * (cf.ugrid().cell() * cf.wgrid().cell());
}

double energy_identity_gap(const QLCSTCoefficients& c, const QSignal2D& f) {
  const double ef = f.energy();
  if (ef == 0.0) throw Error(ErrorKind::ZeroSignal, "energy identity of the zero signal");
  const double target = lambda_constant(c.window()) * ef;
  return std::abs(c.energy() - target) / target;
}

double marginal_qlct_gap(const QLCSTCoefficients& c, const QSignal2D& f, const ParamMatrix& m1,
                         const ParamMatrix& m2) {
  const Grid2D& u = c.ugrid();
  const std::size_t nw = c.wgrid().size();
  std::vector<Quaternion> marginal(nw);
  for (std::size_t iu1 = 0; iu1 < u.axis1.n; ++iu1) {
    for (std::size_t iu2 = 0; iu2 < u.axis2.n; ++iu2) {
      const Quaternion* row = &c.data()[c.u_index(iu1, iu2) * nw];
      for (std::size_t k = 0; k < nw; ++k) marginal[k] += row[k];
    }
  }
  for (auto& q : marginal) q *= u.cell();
  const QSpectrum2D spectrum = qlct_auto_forward(f, m1, m2, c.wgrid());
  return relative_l2(marginal, spectrum.samples());
}

CovarianceReport covariance_residuals(const std::function<Quaternion(double, double)>& fn, const Grid2D& xgrid,
                                      const WindowSpec& window, const ParamMatrix& m1, const ParamMatrix& m2,
                                      std::pair<double, double> shift, std::pair<double, double> modulation) {
  check_grid(xgrid, "signal grid");
  if (!symmetric(xgrid.axis1) || !symmetric(xgrid.axis2)) {
    throw Error(ErrorKind::GridMismatch, "covariance checks need a grid symmetric about the origin");
  }
  const Grid2D& ugrid = xgrid;
  const Grid2D wgrid = default_spectral_grid(xgrid, m1, m2);
  auto sampled = [&](auto&& g) {
    QSignal2D out(xgrid);
    for (std::size_t i1 = 0; i1 < xgrid.axis1.n; ++i1) {
      for (std::size_t i2 = 0; i2 < xgrid.axis2.n; ++i2) out.at(i1, i2) = g(xgrid.axis1.at(i1), xgrid.axis2.at(i2));
    }
    return out;
  };
  CovarianceReport report;

  {  // S_{PΨ}[Pf](u, w) against S_Ψ[f](−u, −w)
    const QSignal2D f = sampled(fn);
    const QSignal2D pf = sampled([&](double a, double b) { return fn(-a, -b); });
    const QLCSTCoefficients lhs = qlcst_forward(pf, window.reflect(), m1, m2, ugrid, wgrid);
    const QLCSTCoefficients base = qlcst_forward(f, window, m1, m2, ugrid, wgrid);
    std::vector<Quaternion> rhs(lhs.data().size());
    const std::size_t nu1 = ugrid.axis1.n, nu2 = ugrid.axis2.n, nw1 = wgrid.axis1.n, nw2 = wgrid.axis2.n;
    std::size_t k = 0;
    for (std::size_t a = 0; a < nu1; ++a)
      for (std::size_t b = 0; b < nu2; ++b)
        for (std::size_t c = 0; c < nw1; ++c)
          for (std::size_t d = 0; d < nw2; ++d) rhs[k++] = base.at(nu1 - 1 - a, nu2 - 1 - b, nw1 - 1 - c, nw2 - 1 - d);
    report.parity = relative_l2(lhs.data(), rhs);
  }

  {  // S[f(· − α)](u, w) against e^{μ1(A1α1² − 2α1w1)/(2B1)} S[f̃](u − α, w) e^{μ2(A2α2² − 2α2w2)/(2B2)}
    const auto [a1, a2] = shift;
    const QSignal2D moved = sampled([&](double x1, double x2) { return fn(x1 - a1, x2 - a2); });
    const QSignal2D tilde = sampled([&](double t1, double t2) {
      return exp_axis(Axis::Mu1, m1.a() * t1 * a1 / m1.b()) * fn(t1, t2) * exp_axis(Axis::Mu2, m2.a() * t2 * a2 / m2.b());
    });
    const QLCSTCoefficients lhs = qlcst_forward(moved, window, m1, m2, ugrid, wgrid);
    const Grid2D back{shifted(ugrid.axis1, -a1), shifted(ugrid.axis2, -a2)};
    QLCSTCoefficients rhs = qlcst_forward(tilde, window, m1, m2, back, wgrid);
    for (std::size_t iu = 0; iu < ugrid.size(); ++iu) {
      for (std::size_t j1 = 0; j1 < wgrid.axis1.n; ++j1) {
        const double w1 = wgrid.axis1.at(j1);
        const Quaternion e1 = exp_axis(Axis::Mu1, (m1.a() * a1 * a1 - 2.0 * a1 * w1) / (2.0 * m1.b()));
        for (std::size_t j2 = 0; j2 < wgrid.axis2.n; ++j2) {
          const double w2 = wgrid.axis2.at(j2);
          const Quaternion e2 = exp_axis(Axis::Mu2, (m2.a() * a2 * a2 - 2.0 * a2 * w2) / (2.0 * m2.b()));
          Quaternion& q = rhs.at(iu / ugrid.axis2.n, iu % ugrid.axis2.n, j1, j2);
          q = e1 * q * e2;
        }
      }
    }
    report.shift = relative_l2(lhs.data(), rhs.data());
  }

  {  // S[M_s f](u, w) against e^{μ1 D1(2w1s1 − B1s1²)/2} Σ K1(·, w1 − s1B1) f Ψ̄ K2(·, w2 − s2B2) e^{μ2 …}
    const auto [s1, s2] = modulation;
    const QSignal2D modulated = sampled([&](double x1, double x2) {
      return exp_axis(Axis::Mu1, s1 * x1) * fn(x1, x2) * exp_axis(Axis::Mu2, s2 * x2);
    });
    const QSignal2D f = sampled(fn);
    const QLCSTCoefficients lhs = qlcst_forward(modulated, window, m1, m2, ugrid, wgrid);
    const Grid2D kernel_w{shifted(wgrid.axis1, -s1 * m1.b()), shifted(wgrid.axis2, -s2 * m2.b())};
    auto prefactored = [&](QLCSTCoefficients c) {
      for (std::size_t iu = 0; iu < ugrid.size(); ++iu) {
        for (std::size_t j1 = 0; j1 < wgrid.axis1.n; ++j1) {
          const double w1 = wgrid.axis1.at(j1);
          const Quaternion p1 = exp_axis(Axis::Mu1, m1.d() * (2.0 * w1 * s1 - m1.b() * s1 * s1) / 2.0);
          for (std::size_t j2 = 0; j2 < wgrid.axis2.n; ++j2) {
            const double w2 = wgrid.axis2.at(j2);
            const Quaternion p2 = exp_axis(Axis::Mu2, m2.d() * (2.0 * w2 * s2 - m2.b() * s2 * s2) / 2.0);
            Quaternion& q = c.at(iu / ugrid.axis2.n, iu % ugrid.axis2.n, j1, j2);
            q = p1 * q * p2;
          }
        }
      }
      return c;
    };
    const auto ordered = prefactored(compute(f, window, m1, m2, ugrid, wgrid, kernel_w, QlcstMethod::Auto));
    report.modulation_ordered = relative_l2(lhs.data(), ordered.data());
    // K(w − sB, x) carries A on the frequency slot and D on the spatial slot: the kernel of (D, B, C, A).
    const ParamMatrix sw1 = ParamMatrix::validate(m1.d(), m1.b(), m1.c(), m1.a());
    const ParamMatrix sw2 = ParamMatrix::validate(m2.d(), m2.b(), m2.c(), m2.a());
    auto swapped = compute(f, window, sw1, sw2, ugrid, wgrid, kernel_w, QlcstMethod::Auto);
    report.modulation_swapped = relative_l2(lhs.data(), prefactored(std::move(swapped)).data());
  }
  return report;
}

std::pair<ParamMatrix, ParamMatrix> special_case_matrix(const SpecialCase& kind) {
  switch (kind.kind) {
    case SpecialCase::Kind::Fractional: {
      const double theta = kind.parameter;
      if (std::abs(std::sin(theta)) <= kParamTolerance) {
        throw Error(ErrorKind::DegenerateAngle, "fractional angle must not be a multiple of pi");
      }
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      auto m = ParamMatrix::validate(c, s, -s, c, "fractional(" + std::to_string(theta) + ")");
      return {m, m};
    }
    case SpecialCase::Kind::Fresnel: {
      auto m = ParamMatrix::validate(1.0, kind.parameter, 0.0, 1.0, "fresnel(" + std::to_string(kind.parameter) + ")");
      return {m, m};
    }
    case SpecialCase::Kind::Stockwell:
    default: {
      auto m = ParamMatrix::validate(0.0, 1.0, -1.0, 0.0, "stockwell");
      return {m, m};
    }
  }
}

}  // namespace qlcst
