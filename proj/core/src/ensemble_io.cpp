/*
 * Copyright 2026 The digp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "digp/ensemble_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace digp {
namespace {

constexpr std::array<char, 8> kMagic = {'D', 'I', 'G', 'P', 'E', 'N', 'S', '\0'};

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void u32(std::uint32_t v) { bytes(v, 4); }
  void u64(std::uint64_t v) { bytes(v, 8); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

  void support(const SupportSet& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    for (Index i : s) u32(static_cast<std::uint32_t>(i + 1));
  }

 private:
  void bytes(std::uint64_t v, int count) {
    char buf[8];
    for (int i = 0; i < count; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out_.write(buf, count);
  }

  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(bytes(4)); }
  std::uint64_t u64() { return bytes(8); }
  double f64() { return std::bit_cast<double>(u64()); }

  SupportSet support(std::size_t n) {
    const std::uint32_t count = u32();
    if (count > n) throw std::runtime_error("ensemble: support larger than N");
    std::vector<Index> idx(count);
    for (auto& i : idx) {
      i = u32();
      if (i == 0 || i > n) throw std::runtime_error("ensemble: support index out of range");
    }
    return SupportSet::from_one_based(idx);
  }

  void raw(char* dst, std::size_t count) {
    in_.read(dst, static_cast<std::streamsize>(count));
    if (in_.gcount() != static_cast<std::streamsize>(count)) {
      throw std::runtime_error("ensemble: truncated input");
    }
  }

 private:
  std::uint64_t bytes(int count) {
    unsigned char buf[8];
    raw(reinterpret_cast<char*>(buf), static_cast<std::size_t>(count));
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return v;
  }

  std::istream& in_;
};

}  // namespace

void write_ensemble(std::ostream& out, const Ensemble& e) {
  if (e.nodes.empty()) throw std::invalid_argument("write_ensemble: empty ensemble");
  const auto n = static_cast<std::uint32_t>(e.nodes.front().a.cols());
  const auto m = static_cast<std::uint32_t>(e.nodes.front().a.rows());
  Writer w(out);
  out.write(kMagic.data(), kMagic.size());
  w.u32(kEnsembleFormatVersion);
  w.u32(n);
  w.u32(m);
  w.u32(static_cast<std::uint32_t>(e.nodes.size()));
  w.u32(static_cast<std::uint32_t>(e.k_common));
  w.u64(e.seed);
  for (std::size_t l = 0; l < e.nodes.size(); ++l) {
    const NodeProblem& p = e.nodes[l];
    if (p.a.cols() != n || p.a.rows() != m) {
      throw std::invalid_argument("write_ensemble: nodes disagree on matrix shape");
    }
    w.u32(static_cast<std::uint32_t>(e.k_private.at(l)));
    w.f64(p.noise_variance);
    w.support(p.common);
    w.support(p.private_support);
    for (Eigen::Index j = 0; j < p.a.cols(); ++j) {
      for (Eigen::Index i = 0; i < p.a.rows(); ++i) w.f64(p.a(i, j));
    }
    for (Eigen::Index i = 0; i < p.x.size(); ++i) w.f64(p.x[i]);
    for (Eigen::Index i = 0; i < p.y.size(); ++i) w.f64(p.y[i]);
  }
  if (!out) throw std::runtime_error("write_ensemble: stream write failed");
}

Ensemble read_ensemble(std::istream& in) {
  Reader r(in);
  std::array<char, 8> magic{};
  r.raw(magic.data(), magic.size());
  if (magic != kMagic) throw std::runtime_error("ensemble: bad magic");
  const std::uint32_t version = r.u32();
  if (version != kEnsembleFormatVersion) {
    throw std::runtime_error("ensemble: unsupported format version " + std::to_string(version));
  }
  const std::size_t n = r.u32();
  const std::size_t m = r.u32();
  const std::size_t nodes = r.u32();
  if (n == 0 || m == 0 || m > n) throw std::runtime_error("ensemble: bad dimensions");
  Ensemble e;
  e.k_common = r.u32();
  e.seed = r.u64();
  e.nodes.resize(nodes);
  e.k_private.resize(nodes);
  for (std::size_t l = 0; l < nodes; ++l) {
    NodeProblem& p = e.nodes[l];
    e.k_private[l] = r.u32();
    p.noise_variance = r.f64();
    p.common = r.support(n);
    p.private_support = r.support(n);
    p.a.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    for (Eigen::Index j = 0; j < p.a.cols(); ++j) {
      for (Eigen::Index i = 0; i < p.a.rows(); ++i) p.a(i, j) = r.f64();
    }
    p.x.resize(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < p.x.size(); ++i) p.x[i] = r.f64();
    p.y.resize(static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < p.y.size(); ++i) p.y[i] = r.f64();
  }
  return e;
}

void save_ensemble(const std::filesystem::path& path, const Ensemble& ensemble) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_ensemble(out, ensemble);
}

Ensemble load_ensemble(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_ensemble(in);
}

}  // namespace digp
