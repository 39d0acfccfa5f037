// Copyright 2026 The czcp Authors.
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

#include "czcp/training.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "czcp/error.hpp"

namespace czcp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Accepts "re", "imj", "re+imj", "re-imj", "j", "-j"; 'i' works as 'j'.
std::complex<double> parse_cell(std::string_view cell) {
  cell = trim(cell);
  const std::string s(cell);
  if (s.empty()) throw UsageError("empty matrix cell");
  const char last = s.back();
  const char* begin = s.c_str();
  char* end = nullptr;

  if (last != 'j' && last != 'i') {
    const double re = std::strtod(begin, &end);
    if (end != begin + s.size()) throw UsageError("bad matrix cell '" + s + "'");
    return {re, 0.0};
  }

  // Split at the last sign that is not an exponent sign and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size() - 1; i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = s.substr(split == std::string::npos ? 0 : split);
  im_part.pop_back();
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";

  double re = 0.0;
  if (!re_part.empty()) {
    re = std::strtod(re_part.c_str(), &end);
    if (end != re_part.c_str() + re_part.size()) {
      throw UsageError("bad matrix cell '" + s + "'");
    }
  }
  const double im = std::strtod(im_part.c_str(), &end);
  if (end != im_part.c_str() + im_part.size()) {
    throw UsageError("bad matrix cell '" + s + "'");
  }
  return {re, im};
}

std::string fmt12(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Eigen::MatrixXcd gram(const TrainingMatrix& x) {
  return x.entries().adjoint() * x.entries();
}

}  // namespace

TrainingMatrix::TrainingMatrix(Eigen::MatrixXcd entries, int transmit_antennas,
                               int lambda, int q)
    : entries_(std::move(entries)), nt_(transmit_antennas), lambda_(lambda), q_(q) {
  if (nt_ < 1 || lambda_ < 0) {
    throw UsageError("need N_t >= 1 and lambda >= 0");
  }
  if (entries_.cols() != static_cast<Eigen::Index>(nt_) * (lambda_ + 1)) {
    throw UsageError("training matrix has " + std::to_string(entries_.cols()) +
                     " columns, expected N_t*(lambda+1) = " +
                     std::to_string(nt_ * (lambda_ + 1)));
  }
  if (entries_.rows() < 1) throw UsageError("training matrix has no rows");
  for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
      const double mag = std::abs(entries_(r, c));
      if (mag != 0.0 && std::abs(mag - 1.0) > kUnitMagnitudeTolerance) {
        throw UsageError("nonzero training entries must have unit magnitude");
      }
    }
  }
  if (q_ == 0) q_ = static_cast<int>(entries_.rows() / nt_);
  if (q_ < 1) throw UsageError("Q must be at least 1");
}

double ls_mse(const Eigen::MatrixXcd& x, int transmit_antennas, int lambda,
              double sigma2) {
  if (transmit_antennas < 1 || lambda < 0) {
    throw UsageError("need N_t >= 1 and lambda >= 0");
  }
  const Eigen::MatrixXcd g = x.adjoint() * x;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(g);
  if (!lu.isInvertible()) {
    throw RankDeficientError("X^H X is singular (rank " +
                             std::to_string(lu.rank()) + " of " +
                             std::to_string(g.rows()) + ")");
  }
  const double trace = lu.inverse().trace().real();
  const double columns = static_cast<double>(transmit_antennas) *
                         static_cast<double>(lambda + 1);
  return sigma2 / columns * trace;
}

double ls_mse(const TrainingMatrix& x, double sigma2) {
  return ls_mse(x.entries(), x.transmit_antennas(), x.lambda(), sigma2);
}

double mse_lower_bound(double sigma2, int q) {
  if (q < 1) throw UsageError("Q must be at least 1");
  return sigma2 / q;
}

bool is_optimal_training(const TrainingMatrix& x, double tol) {
  Eigen::MatrixXcd d = gram(x);
  d.diagonal().array() -= static_cast<double>(x.q());
  return d.cwiseAbs().maxCoeff() <= tol;
}

TrainingMatrix demo_training_matrix(const SequencePair& pair,
                                    int transmit_antennas, int lambda) {
  if (transmit_antennas < 1 || lambda < 0) {
    throw UsageError("need N_t >= 1 and lambda >= 0");
  }
  const auto n = static_cast<Eigen::Index>(pair.size());
  const Eigen::Index frame = 2 * transmit_antennas * n;
  if (lambda >= frame) throw UsageError("lambda must be shorter than the frame");

  auto realize = [&](const Sequence& s, Eigen::Index k) {
    const double angle = 2.0 * std::numbers::pi * s[k] / s.q();
    if (s.is_binary()) return std::complex<double>(s[k] == 0 ? 1.0 : -1.0, 0.0);
    return std::polar(1.0, angle);
  };

  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(frame, transmit_antennas * (lambda + 1));
  for (int ant = 0; ant < transmit_antennas; ++ant) {
    Eigen::VectorXcd signal = Eigen::VectorXcd::Zero(frame);
    for (Eigen::Index k = 0; k < n; ++k) {
      signal(ant * n + k) = realize(pair.first(), k);
      signal((transmit_antennas + ant) * n + k) = realize(pair.second(), k);
    }
    for (int l = 0; l <= lambda; ++l) {
      const Eigen::Index col = ant * (lambda + 1) + l;
      for (Eigen::Index r = 0; r < frame; ++r) {
        x(r, col) = signal((r - l + frame) % frame);
      }
    }
  }
  return TrainingMatrix(std::move(x), transmit_antennas, lambda);
}

Eigen::MatrixXcd parse_complex_csv(std::string_view text) {
  std::vector<std::vector<std::complex<double>>> rows;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    if (!line.empty() && !line.starts_with('#')) {
      std::vector<std::complex<double>> row;
      std::string_view rest = line;
      while (true) {
        const auto comma = rest.find(',');
        row.push_back(parse_cell(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw UsageError("matrix rows have different widths");
      }
      rows.push_back(std::move(row));
    }
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (rows.empty()) throw UsageError("matrix file has no rows");
  Eigen::MatrixXcd m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::string to_complex_csv(const Eigen::MatrixXcd& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c != 0) out.push_back(',');
      const double im = m(r, c).imag() == 0.0 ? 0.0 : m(r, c).imag();
      out += fmt12(m(r, c).real());
      out += im < 0 ? "-" : "+";
      out += fmt12(std::abs(im));
      out.push_back('j');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace czcp
