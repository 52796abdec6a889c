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

// qlcst: generate signals, run transforms, verify properties, export slices.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "qlcst/errors.hpp"
#include "qlcst/generators.hpp"
#include "qlcst/io.hpp"
#include "qlcst/parallel.hpp"
#include "qlcst/qlct.hpp"
#include "qlcst/stransform.hpp"
#include "qlcst/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

using qlcst::Error;
using qlcst::ErrorKind;

// "N,ORIGIN,SPACING" for both axes, or "N1,O1,D1;N2,O2,D2".
qlcst::Grid1D parse_axis(const std::string& text) {
  qlcst::Grid1D g;
  double n = 0.0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &n, &g.origin, &g.spacing, &tail) != 3 || n < 1 ||
      n != static_cast<double>(static_cast<std::size_t>(n))) {
    throw Error(ErrorKind::BadParameter, "grid \"" + text + "\" is not N,ORIGIN,SPACING");
  }
  g.n = static_cast<std::size_t>(n);
  return g;
}

qlcst::Grid2D parse_grid(const std::string& text) {
  const auto semi = text.find(';');
  qlcst::Grid2D g = semi == std::string::npos ? qlcst::square(parse_axis(text))
                                              : qlcst::Grid2D{parse_axis(text.substr(0, semi)), parse_axis(text.substr(semi + 1))};
  qlcst::check_grid(g, "grid option");
  return g;
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text) {
  unsigned long a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lu,%lu%c", &a, &b, &tail) != 2) {
    throw Error(ErrorKind::BadParameter, "index pair \"" + text + "\" is not I,J");
  }
  return {a, b};
}

// Grid of the inverse transform: the reciprocal of the forward spectral grid.
qlcst::Grid2D inverse_grid(const qlcst::Grid2D& u, const qlcst::ParamMatrix& m1, const qlcst::ParamMatrix& m2) {
  auto axis = [](const qlcst::Grid1D& g, const qlcst::ParamMatrix& m) {
    return qlcst::centered_grid(g.n, 2.0 * qlcst::kPi * std::abs(m.b()) / (static_cast<double>(g.n) * g.spacing));
  };
  return {axis(u.axis1, m1), axis(u.axis2, m2)};
}

struct MagnitudeImage {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
};

void write_csv_image(const std::string& path, const MagnitudeImage& img) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::IoError, "cannot write " + path);
  char buf[32];
  for (std::size_t r = 0; r < img.rows; ++r) {
    for (std::size_t c = 0; c < img.cols; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", img.values[r * img.cols + c]);
      os << (c ? "," : "") << buf;
    }
    os << '\n';
  }
  if (!os) throw Error(ErrorKind::IoError, "short write to " + path);
}

void write_pgm(const std::string& path, const MagnitudeImage& img) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::IoError, "cannot write " + path);
  const auto [lo, hi] = std::minmax_element(img.values.begin(), img.values.end());
  const double range = *hi - *lo;
  os << "P5\n" << img.cols << ' ' << img.rows << "\n255\n";
  for (double v : img.values) {
    const double t = range > 0.0 ? (v - *lo) / range : 0.0;
    os.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * t))));
  }
  if (!os) throw Error(ErrorKind::IoError, "short write to " + path);
}

template <class Field>
MagnitudeImage magnitude(const Field& f) {
  MagnitudeImage img{f.n1(), f.n2(), {}};
  for (const auto& q : f.samples()) img.values.push_back(qlcst::abs(q));
  return img;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion linear canonical and S-transforms"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = QLCST_THREADS or all cores)");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a test signal (QSG1)");
  std::string gen_kind = "gaussian";
  std::string gen_out;
  std::size_t gen_n = 64;
  double gen_extent = 8.0;
  bool gen_nodes = false;
  qlcst::GeneratorSpec spec;
  std::vector<double> center;
  std::vector<int> orders;
  gen->add_option("-k,--kind", gen_kind, "gaussian | shifted-gaussian | dilated-gaussian | hermite | chirp | impulse | "
                                    "random-hermite | noise")
      ->required();
  gen->add_option("-o,--output", gen_out, "Output file")->required();
  gen->add_option("-n,--n", gen_n, "Samples per axis")->check(CLI::PositiveNumber);
  gen->add_option("--extent", gen_extent, "Grid covers [-extent, extent] per axis")->check(CLI::PositiveNumber);
  gen->add_flag("--nodes", gen_nodes, "Use a node grid that contains the origin");
  gen->add_option("--sigma", spec.sigma, "Gaussian width");
  gen->add_option("--center", center, "Center x1 x2")->expected(2);
  gen->add_option("--scale", spec.scale, "Dilation a");
  gen->add_option("--order", orders, "Hermite orders n1 n2")->expected(2);
  gen->add_option("--rate", spec.rate, "Chirp rate");
  gen->add_option("--seed", spec.seed, "Seed for random kinds");
  gen->add_option("--max-order", spec.max_order, "Highest order for random-hermite");
  gen->add_flag("--normalize", spec.normalize, "Rescale to unit energy");

  // qlct
  auto* qlct = app.add_subcommand("qlct", "Two-sided quaternion LCT of a QSG1 file");
  std::string qlct_in, qlct_out, qlct_m1 = "0,1,-1,0", qlct_m2 = "0,1,-1,0", qlct_grid;
  bool qlct_fast = false, qlct_inverse = false;
  qlct->add_option("-i,--input", qlct_in, "Input QSG1")->required();
  qlct->add_option("-o,--output", qlct_out, "Output QSG1")->required();
  qlct->add_option("--m1", qlct_m1, "Left matrix A,B,C,D");
  qlct->add_option("--m2", qlct_m2, "Right matrix A,B,C,D");
  qlct->add_option("--grid", qlct_grid, "Output grid N,ORIGIN,SPACING[;N,ORIGIN,SPACING]");
  qlct->add_flag("--fast", qlct_fast, "Require the chirp-FFT path");
  qlct->add_flag("--inverse", qlct_inverse, "Apply the inverse transform");

  // qlcst
  auto* st = app.add_subcommand("qlcst", "Quaternion linear canonical S-transform (QCF1 output)");
  std::string st_in, st_out, st_m1 = "0,1,-1,0", st_m2 = "0,1,-1,0", st_window = "fixed-gauss:1,1", st_ugrid, st_wgrid;
  std::string st_method = "auto";
  st->add_option("-i,--input", st_in, "Input QSG1")->required();
  st->add_option("-o,--output", st_out, "Output QCF1")->required();
  st->add_option("--m1", st_m1, "Left matrix A,B,C,D");
  st->add_option("--m2", st_m2, "Right matrix A,B,C,D");
  st->add_option("--window", st_window, "fixed-gauss:S1,S2 | s-gauss | table:PATH | constant:V");
  st->add_option("--ugrid", st_ugrid, "Translation grid (default: signal grid)");
  st->add_option("--wgrid", st_wgrid, "Frequency grid (default: FFT-compatible grid)");
  st->add_option("--method", st_method, "auto | direct | slice | separable")
      ->check(CLI::IsMember({"auto", "direct", "slice", "separable"}));

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "Invert QCF1 coefficients back to a QSG1 signal");
  std::string rec_in, rec_out, rec_grid;
  rec->add_option("-i,--input", rec_in, "Input QCF1")->required();
  rec->add_option("-o,--output", rec_out, "Output QSG1")->required();
  rec->add_option("--grid", rec_grid, "Signal grid (default: the translation grid)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, v_m1, v_m2, v_window, v_signal, v_csv;
  qlcst::VerifyOptions vopt;
  std::string suite_help = "Suite: all";
  for (const auto& s : qlcst::suite_names()) suite_help += " | " + s;
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--m1", v_m1, "Left matrix (requires --m2)");
  verify->add_option("--m2", v_m2, "Right matrix (requires --m1)");
  verify->add_option("--window", v_window, "Window override");
  verify->add_option("-i,--input,--signal", v_signal, "QSG1 signal to use instead of the built-in battery");
  verify->add_option("--axis", vopt.axis, "1, 2, or 0 for both")->check(CLI::Range(0, 2));
  verify->add_option("-n,--n", vopt.n, "Samples per axis (0 = suite default)");
  verify->add_option("--extent", vopt.extent, "Signal grid half-width")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "Seed for random battery members");
  verify->add_option("--csv", v_csv, "Also write the report as CSV");

  // export
  auto* exp = app.add_subcommand("export", "Magnitude of a signal or coefficient slice as CSV or PGM");
  std::string ex_in, ex_out, ex_u, ex_w, ex_format;
  exp->add_option("-i,--input", ex_in, "QSG1 or QCF1 file")->required();
  exp->add_option("-o,--output", ex_out, "Output file")->required();
  auto* u_opt = exp->add_option("--u", ex_u, "Fixed u index I,J: image over w");
  exp->add_option("--w", ex_w, "Fixed w index I,J: image over u")->excludes(u_opt);
  exp->add_option("--format", ex_format, "csv | pgm (default from the extension)")
      ->check(CLI::IsMember({"csv", "pgm"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    qlcst::set_thread_limit(threads);

    if (*gen) {
      spec.kind = qlcst::GeneratorSpec::parse_kind(gen_kind);
      if (!center.empty()) {
        spec.center1 = center[0];
        spec.center2 = center[1];
      }
      if (!orders.empty()) {
        spec.order1 = orders[0];
        spec.order2 = orders[1];
      }
      const auto axis = gen_nodes ? qlcst::node_grid(gen_n, gen_extent) : qlcst::midpoint_grid(gen_n, gen_extent);
      qlcst::write_signal(gen_out, qlcst::gen_signal(spec, qlcst::square(axis)));
      std::cout << spec.label() << " -> " << gen_out << '\n';
    } else if (*qlct) {
      const auto m1 = qlcst::ParamMatrix::parse(qlct_m1);
      const auto m2 = qlcst::ParamMatrix::parse(qlct_m2);
      const qlcst::QSignal2D in = qlcst::read_signal(qlct_in);
      qlcst::QSignal2D out;
      if (qlct_inverse) {
        const qlcst::QSpectrum2D spectrum(in.grid(), in.samples());
        const auto grid = qlct_grid.empty() ? inverse_grid(in.grid(), m1, m2) : parse_grid(qlct_grid);
        out = qlct_fast ? qlcst::qlct_fast_inverse(spectrum, m1, m2, grid) : qlcst::qlct_auto_inverse(spectrum, m1, m2, grid);
      } else {
        const auto grid = qlct_grid.empty() ? qlcst::default_spectral_grid(in.grid(), m1, m2) : parse_grid(qlct_grid);
        const auto s = qlct_fast ? qlcst::qlct_fast_forward(in, m1, m2, grid) : qlcst::qlct_auto_forward(in, m1, m2, grid);
        out = qlcst::QSignal2D(s.grid(), s.samples());
      }
      qlcst::write_signal(qlct_out, out);
    } else if (*st) {
      const auto m1 = qlcst::ParamMatrix::parse(st_m1);
      const auto m2 = qlcst::ParamMatrix::parse(st_m2);
      const qlcst::QSignal2D in = qlcst::read_signal(st_in);
      const auto ugrid = st_ugrid.empty() ? in.grid() : parse_grid(st_ugrid);
      const auto wgrid = st_wgrid.empty() ? qlcst::default_spectral_grid(in.grid(), m1, m2) : parse_grid(st_wgrid);
      const qlcst::QlcstMethod method = st_method == "direct"      ? qlcst::QlcstMethod::Direct
                                        : st_method == "slice"     ? qlcst::QlcstMethod::Slice
                                        : st_method == "separable" ? qlcst::QlcstMethod::Separable
                                                                   : qlcst::QlcstMethod::Auto;
      const auto window = qlcst::WindowSpec::parse(st_window);
      qlcst::write_coefficients(st_out, qlcst::qlcst_forward(in, window, m1, m2, ugrid, wgrid, method));
    } else if (*rec) {
      const auto c = qlcst::read_coefficients(rec_in);
      qlcst::write_signal(rec_out, rec_grid.empty() ? qlcst::qlcst_reconstruct(c)
                                                    : qlcst::qlcst_reconstruct(c, parse_grid(rec_grid)));
    } else if (*verify) {
      if (v_m1.empty() != v_m2.empty()) throw Error(ErrorKind::BadParameter, "--m1 and --m2 go together");
      if (!v_m1.empty()) {
        vopt.m1 = qlcst::ParamMatrix::parse(v_m1);
        vopt.m2 = qlcst::ParamMatrix::parse(v_m2);
      }
      if (!v_window.empty()) vopt.window = qlcst::WindowSpec::parse(v_window);
      if (!v_signal.empty()) vopt.signal = qlcst::read_signal(v_signal);
      std::vector<std::string> suites = suite == "all" ? qlcst::suite_names() : std::vector<std::string>{suite};
      std::ofstream csv;
      if (!v_csv.empty()) {
        csv.open(v_csv);
        if (!csv) throw Error(ErrorKind::IoError, "cannot write " + v_csv);
      }
      bool ok = true;
      for (std::size_t k = 0; k < suites.size(); ++k) {
        const auto report = qlcst::run_suite(suites[k], vopt);
        qlcst::write_text(std::cout, report);
        if (csv.is_open()) qlcst::write_csv(csv, report, k == 0);
        ok = ok && report.passed();
      }
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (*exp) {
      MagnitudeImage img;
      const auto any = qlcst::read_any(ex_in);
      if (const auto* f = std::get_if<qlcst::QSignal2D>(&any)) {
        img = magnitude(*f);
      } else {
        const auto& c = std::get<qlcst::QLCSTCoefficients>(any);
        if (!ex_w.empty()) {
          const auto [j1, j2] = parse_pair(ex_w);
          if (j1 >= c.wgrid().axis1.n || j2 >= c.wgrid().axis2.n) throw Error(ErrorKind::GridMismatch, "w index out of range");
          img = {c.ugrid().axis1.n, c.ugrid().axis2.n, {}};
          for (std::size_t a = 0; a < img.rows; ++a)
            for (std::size_t b = 0; b < img.cols; ++b) img.values.push_back(qlcst::abs(c.at(a, b, j1, j2)));
        } else {
          const auto [i1, i2] = ex_u.empty() ? std::pair{c.ugrid().axis1.n / 2, c.ugrid().axis2.n / 2} : parse_pair(ex_u);
          if (i1 >= c.ugrid().axis1.n || i2 >= c.ugrid().axis2.n) throw Error(ErrorKind::GridMismatch, "u index out of range");
          img = magnitude(c.slice(i1, i2));
        }
      }
      const bool pgm = ex_format.empty() ? ex_out.size() >= 4 && ex_out.substr(ex_out.size() - 4) == ".pgm"
                                         : ex_format == "pgm";
      if (pgm) {
        write_pgm(ex_out, img);
      } else {
        write_csv_image(ex_out, img);
      }
    }
  } catch (const qlcst::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
