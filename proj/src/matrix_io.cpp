// xmamimo -- subarray receiver library for extremely large aperture massive MIMO
// Copyright (C) 2026 the xmamimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "xmamimo/matrix_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace xmamimo {

namespace {

constexpr std::array<char, 8> kMagic = {'X', 'M', 'A', 'M', 'A', 'T', '0', '1'};
constexpr std::uint32_t kKindReal = 0;
constexpr std::uint32_t kKindComplex = 1;

static_assert(std::endian::native == std::endian::little,
              "binary matrix format is little-endian; big-endian hosts need byte swaps");

[[noreturn]] void io_fail(const std::string& what, const std::string& path) {
  throw std::runtime_error(what + ": " + path);
}

void write_u32(std::ofstream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void write_u64(std::ofstream& out, std::uint64_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) io_fail("cannot open for writing", path);
  return out;
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode) {
  std::ifstream in(path, mode);
  if (!in) io_fail("cannot open for reading", path);
  return in;
}

void write_binary(const std::string& path, std::uint32_t kind,
                  Eigen::Index rows, Eigen::Index cols, const double* data,
                  std::size_t count) {
  auto out = open_out(path, std::ios::binary);
  out.write(kMagic.data(), kMagic.size());
  write_u32(out, kind);
  write_u64(out, static_cast<std::uint64_t>(rows));
  write_u64(out, static_cast<std::uint64_t>(cols));
  out.write(reinterpret_cast<const char*>(data),
            static_cast<std::streamsize>(count * sizeof(double)));
  if (!out) io_fail("write failed", path);
}

struct BinaryHeader {
  std::uint32_t kind;
  Eigen::Index rows;
  Eigen::Index cols;
};

BinaryHeader read_header(std::ifstream& in, const std::string& path) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) io_fail("bad magic in matrix file", path);
  std::uint32_t kind = 0;
  std::uint64_t rows = 0, cols = 0;
  in.read(reinterpret_cast<char*>(&kind), sizeof(kind));
  in.read(reinterpret_cast<char*>(&rows), sizeof(rows));
  in.read(reinterpret_cast<char*>(&cols), sizeof(cols));
  if (!in) io_fail("truncated matrix header", path);
  return {kind, static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols)};
}

}  // namespace

void write_matrix_binary(const std::string& path, const RealMatrix& m) {
  // Row-major on disk regardless of Eigen's in-memory layout.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
  write_binary(path, kKindReal, m.rows(), m.cols(), rm.data(),
               static_cast<std::size_t>(m.size()));
}

void write_matrix_binary(const std::string& path, const CMatrix& m) {
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
  write_binary(path, kKindComplex, m.rows(), m.cols(),
               reinterpret_cast<const double*>(rm.data()),
               static_cast<std::size_t>(m.size()) * 2);
}

namespace {

void write_text_header(std::ofstream& out, Eigen::Index rows, Eigen::Index cols,
                       const char* kind) {
  out << rows << ' ' << cols << ' ' << kind << '\n';
  out.precision(17);
}

}  // namespace

void write_matrix_text(const std::string& path, const RealMatrix& m) {
  auto out = open_out(path, std::ios::out);
  write_text_header(out, m.rows(), m.cols(), "real");
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
  if (!out) io_fail("write failed", path);
}

void write_matrix_text(const std::string& path, const CMatrix& m) {
  auto out = open_out(path, std::ios::out);
  write_text_header(out, m.rows(), m.cols(), "complex");
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c).real() << ' ' << m(r, c).imag();
    }
    out << '\n';
  }
  if (!out) io_fail("write failed", path);
}

RealMatrix read_real_matrix_binary(const std::string& path) {
  auto in = open_in(path, std::ios::binary);
  const auto hdr = read_header(in, path);
  if (hdr.kind != kKindReal) io_fail("matrix file is not real-valued", path);
  RealMatrix m(hdr.rows, hdr.cols);
  std::vector<double> buf(static_cast<std::size_t>(hdr.rows * hdr.cols));
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(double)));
  if (!in) io_fail("truncated matrix data", path);
  for (Eigen::Index r = 0; r < hdr.rows; ++r)
    for (Eigen::Index c = 0; c < hdr.cols; ++c)
      m(r, c) = buf[static_cast<std::size_t>(r * hdr.cols + c)];
  return m;
}

CMatrix read_complex_matrix_binary(const std::string& path) {
  auto in = open_in(path, std::ios::binary);
  const auto hdr = read_header(in, path);
  if (hdr.kind != kKindComplex) io_fail("matrix file is not complex-valued", path);
  CMatrix m(hdr.rows, hdr.cols);
  std::vector<double> buf(static_cast<std::size_t>(hdr.rows * hdr.cols) * 2);
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(double)));
  if (!in) io_fail("truncated matrix data", path);
  for (Eigen::Index r = 0; r < hdr.rows; ++r)
    for (Eigen::Index c = 0; c < hdr.cols; ++c) {
      const std::size_t i = static_cast<std::size_t>(r * hdr.cols + c) * 2;
      m(r, c) = Complex(buf[i], buf[i + 1]);
    }
  return m;
}

namespace {

struct TextHeader {
  Eigen::Index rows;
  Eigen::Index cols;
  std::string kind;
};

TextHeader read_text_header(std::ifstream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line)) io_fail("missing header line", path);
  std::istringstream hdr(line);
  TextHeader h{};
  if (!(hdr >> h.rows >> h.cols >> h.kind)) io_fail("malformed header line", path);
  return h;
}

}  // namespace

RealMatrix read_real_matrix_text(const std::string& path) {
  auto in = open_in(path, std::ios::in);
  const auto hdr = read_text_header(in, path);
  if (hdr.kind != "real") io_fail("matrix file is not real-valued", path);
  RealMatrix m(hdr.rows, hdr.cols);
  for (Eigen::Index r = 0; r < hdr.rows; ++r)
    for (Eigen::Index c = 0; c < hdr.cols; ++c)
      if (!(in >> m(r, c))) io_fail("truncated matrix data", path);
  return m;
}

CMatrix read_complex_matrix_text(const std::string& path) {
  auto in = open_in(path, std::ios::in);
  const auto hdr = read_text_header(in, path);
  if (hdr.kind != "complex") io_fail("matrix file is not complex-valued", path);
  CMatrix m(hdr.rows, hdr.cols);
  for (Eigen::Index r = 0; r < hdr.rows; ++r)
    for (Eigen::Index c = 0; c < hdr.cols; ++c) {
      double re = 0.0, im = 0.0;
      if (!(in >> re >> im)) io_fail("truncated matrix data", path);
      m(r, c) = Complex(re, im);
    }
  return m;
}

}  // namespace xmamimo
