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

#include "qlcst/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <string_view>

#include "qlcst/errors.hpp"

namespace qlcst {
namespace {

constexpr std::string_view kSignalMagic = "QSG1";
constexpr std::string_view kCoefficientMagic = "QCF1";

template <class T>
void put(std::ostream& os, T value) {
  std::array<char, sizeof(T)> bytes{};
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  os.write(bytes.data(), bytes.size());
}

class Reader {
 public:
  explicit Reader(const std::filesystem::path& path) : in_(path, std::ios::binary), path_(path) {
    if (!in_) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  }

  template <class T>
  T get() {
    std::array<char, sizeof(T)> bytes{};
    read(bytes.data(), bytes.size());
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
  }

  void read(char* out, std::size_t n) {
    in_.read(out, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw Error(ErrorKind::TruncatedFile, path_.string() + " ends before the declared payload");
    }
  }

  std::string magic() {
    std::string m(4, '\0');
    in_.read(m.data(), 4);
    if (in_.gcount() != 4) throw Error(ErrorKind::BadMagic, path_.string() + " is too short to hold a magic tag");
    return m;
  }

  void version() {
    const auto v = get<std::uint16_t>();
    if (v != kFormatVersion) {
      throw Error(ErrorKind::VersionMismatch, "format version " + std::to_string(v) + " in " + path_.string());
    }
  }

  Grid2D grid() {
    Grid2D g;
    g.axis1.n = get<std::uint32_t>();
    g.axis2.n = get<std::uint32_t>();
    g.axis1.origin = get<double>();
    g.axis2.origin = get<double>();
    g.axis1.spacing = get<double>();
    g.axis2.spacing = get<double>();
    check_grid(g, "stored grid");
    return g;
  }

  std::vector<Quaternion> quaternions(std::size_t n) {
    std::vector<Quaternion> out(n);
    for (auto& q : out) {
      q.w = get<double>();
      q.x = get<double>();
      q.y = get<double>();
      q.z = get<double>();
    }
    return out;
  }

 private:
  std::ifstream in_;
  std::filesystem::path path_;
};

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  return os;
}

void put_grid(std::ostream& os, const Grid2D& g) {
  put(os, static_cast<std::uint32_t>(g.axis1.n));
  put(os, static_cast<std::uint32_t>(g.axis2.n));
  put(os, g.axis1.origin);
  put(os, g.axis2.origin);
  put(os, g.axis1.spacing);
  put(os, g.axis2.spacing);
}

void put_quaternions(std::ostream& os, const std::vector<Quaternion>& qs) {
  for (const auto& q : qs) {
    put(os, q.w);
    put(os, q.x);
    put(os, q.y);
    put(os, q.z);
  }
}

void put_matrix(std::ostream& os, const ParamMatrix& m) {
  put(os, m.a());
  put(os, m.b());
  put(os, m.c());
  put(os, m.d());
}

ParamMatrix get_matrix(Reader& r) {
  const double a = r.get<double>();
  const double b = r.get<double>();
  const double c = r.get<double>();
  const double d = r.get<double>();
  return ParamMatrix::validate(a, b, c, d);
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
  os.flush();
  if (!os) throw Error(ErrorKind::IoError, "short write to " + path.string());
}

QSignal2D read_signal_body(Reader& r) {
  r.version();
  const Grid2D g = r.grid();
  return QSignal2D(g, r.quaternions(g.size()));
}

QLCSTCoefficients read_coefficients_body(Reader& r) {
  r.version();
  const Grid2D u = r.grid();
  const Grid2D w = r.grid();
  const ParamMatrix m1 = get_matrix(r);
  const ParamMatrix m2 = get_matrix(r);
  std::string text(r.get<std::uint16_t>(), '\0');
  r.read(text.data(), text.size());
  QLCSTCoefficients c(u, w, WindowSpec::parse(text), m1, m2);
  c.data() = r.quaternions(u.size() * w.size());
  return c;
}

}  // namespace

void write_signal(const std::filesystem::path& path, const QSignal2D& f) {
  auto os = open_out(path);
  os.write(kSignalMagic.data(), 4);
  put(os, kFormatVersion);
  put_grid(os, f.grid());
  put_quaternions(os, f.samples());
  finish(os, path);
}

QSignal2D read_signal(const std::filesystem::path& path) {
  Reader r(path);
  if (r.magic() != kSignalMagic) throw Error(ErrorKind::BadMagic, path.string() + " is not a QSG1 signal");
  return read_signal_body(r);
}

void write_coefficients(const std::filesystem::path& path, const QLCSTCoefficients& c) {
  const std::string text = c.window().describe();
  if (text.empty()) throw Error(ErrorKind::BadParameter, "this window family has no stored form");
  if (text.size() > 0xFFFF) throw Error(ErrorKind::BadParameter, "window description too long");
  auto os = open_out(path);
  os.write(kCoefficientMagic.data(), 4);
  put(os, kFormatVersion);
  put_grid(os, c.ugrid());
  put_grid(os, c.wgrid());
  put_matrix(os, c.m1());
  put_matrix(os, c.m2());
  put(os, static_cast<std::uint16_t>(text.size()));
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  put_quaternions(os, c.data());
  finish(os, path);
}

QLCSTCoefficients read_coefficients(const std::filesystem::path& path) {
  Reader r(path);
  if (r.magic() != kCoefficientMagic) throw Error(ErrorKind::BadMagic, path.string() + " is not a QCF1 file");
  return read_coefficients_body(r);
}

std::variant<QSignal2D, QLCSTCoefficients> read_any(const std::filesystem::path& path) {
  Reader r(path);
  const std::string magic = r.magic();
  if (magic == kSignalMagic) return read_signal_body(r);
  if (magic == kCoefficientMagic) return read_coefficients_body(r);
  throw Error(ErrorKind::BadMagic, path.string() + " has unknown magic '" + magic + "'");
}

}  // namespace qlcst
