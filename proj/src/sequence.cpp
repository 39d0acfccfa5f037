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

#include "czcp/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "czcp/error.hpp"

namespace czcp {
namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view field, std::string_view context) {
  field = trim(field);
  int value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("malformed integer '" + std::string(field) + "' in " +
                     std::string(context));
  }
  return value;
}

void check_modulus(int q) {
  if (q < 2 || q > kMaxModulus) {
    throw UsageError("modulus q=" + std::to_string(q) + " outside [2, " +
                     std::to_string(kMaxModulus) + "]");
  }
}

}  // namespace

Sequence::Sequence(int q, std::vector<Exponent> values)
    : q_(q), values_(std::move(values)) {
  check_modulus(q_);
  if (values_.empty()) throw UsageError("sequence must be non-empty");
  for (Exponent e : values_) {
    if (e >= q_) {
      throw UsageError("exponent " + std::to_string(e) + " not in Z_" +
                       std::to_string(q_));
    }
  }
}

Sequence::Sequence(int q, std::initializer_list<int> values) : q_(q) {
  check_modulus(q_);
  values_.reserve(values.size());
  for (int v : values) {
    if (v < 0 || v >= q_) {
      throw UsageError("exponent " + std::to_string(v) + " not in Z_" +
                       std::to_string(q_));
    }
    values_.push_back(static_cast<Exponent>(v));
  }
  if (values_.empty()) throw UsageError("sequence must be non-empty");
}

Sequence Sequence::from_signs(std::string_view signs) {
  signs = trim(signs);
  std::vector<Exponent> values;
  values.reserve(signs.size());
  while (!signs.empty()) {
    if (signs.front() == '+') {
      values.push_back(0);
      signs.remove_prefix(1);
    } else if (signs.front() == '-') {
      values.push_back(1);
      signs.remove_prefix(1);
    } else if (signs.starts_with(kUnicodeMinus)) {
      values.push_back(1);
      signs.remove_prefix(kUnicodeMinus.size());
    } else {
      throw UsageError("unexpected character '" + std::string(1, signs.front()) +
                       "' in binary sequence");
    }
  }
  return Sequence(2, std::move(values));
}

Sequence Sequence::from_bipolar(std::span<const int> values) {
  std::vector<Exponent> exps;
  exps.reserve(values.size());
  for (int v : values) {
    if (v != 1 && v != -1) throw UsageError("bipolar entries must be +1 or -1");
    exps.push_back(v == 1 ? 0 : 1);
  }
  return Sequence(2, std::move(exps));
}

Sequence Sequence::parse(std::string_view text) {
  text = trim(text);
  if (!text.starts_with("q=")) return from_signs(text);

  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("expected 'q=<q>:<e0>,<e1>,...'");
  }
  const int q = parse_int(text.substr(2, colon - 2), "modulus");
  check_modulus(q);

  std::vector<Exponent> values;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const int e = parse_int(rest.substr(0, comma), "exponent list");
    if (e < 0 || e >= q) {
      throw UsageError("exponent " + std::to_string(e) + " not in Z_" +
                       std::to_string(q));
    }
    values.push_back(static_cast<Exponent>(e));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Sequence(q, std::move(values));
}

std::vector<int> Sequence::bipolar() const {
  if (!is_binary()) throw UsageError("bipolar view requires q = 2");
  std::vector<int> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](Exponent e) { return e == 0 ? 1 : -1; });
  return out;
}

std::string Sequence::to_string() const {
  std::string out;
  if (is_binary()) {
    out.reserve(values_.size());
    for (Exponent e : values_) out.push_back(e == 0 ? '+' : '-');
    return out;
  }
  out = "q=" + std::to_string(q_) + ":";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

SequencePair::SequencePair(Sequence first, Sequence second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.q() != second_.q()) {
    throw UsageError("pair sequences use different moduli");
  }
  if (first_.size() != second_.size()) {
    throw UsageError("pair sequences have different lengths (" +
                     std::to_string(first_.size()) + " vs " +
                     std::to_string(second_.size()) + ")");
  }
}

SequencePair SequencePair::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    if (!line.empty() && !line.starts_with('#')) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.size() != 2) {
    throw UsageError("pair file must contain exactly two sequence lines, found " +
                     std::to_string(lines.size()));
  }
  return SequencePair(Sequence::parse(lines[0]), Sequence::parse(lines[1]));
}

std::string SequencePair::to_string() const {
  return first_.to_string() + "\n" + second_.to_string() + "\n";
}

Sequence reverse(const Sequence& a) {
  std::vector<Exponent> v(a.values().rbegin(), a.values().rend());
  return Sequence(a.q(), std::move(v));
}

Sequence negate(const Sequence& a) {
  if (a.q() % 2 != 0) {
    throw UsageError("negation needs an even modulus, got q=" +
                     std::to_string(a.q()));
  }
  const int half = a.q() / 2;
  std::vector<Exponent> v(a.size());
  std::transform(a.values().begin(), a.values().end(), v.begin(),
                 [&](Exponent e) {
                   return static_cast<Exponent>((e + half) % a.q());
                 });
  return Sequence(a.q(), std::move(v));
}

Sequence conjugate(const Sequence& a) {
  std::vector<Exponent> v(a.size());
  std::transform(a.values().begin(), a.values().end(), v.begin(),
                 [&](Exponent e) {
                   return static_cast<Exponent>((a.q() - e) % a.q());
                 });
  return Sequence(a.q(), std::move(v));
}

Sequence concat(const Sequence& a, const Sequence& b) {
  if (a.q() != b.q()) throw UsageError("concat needs equal moduli");
  std::vector<Exponent> v(a.values().begin(), a.values().end());
  v.insert(v.end(), b.values().begin(), b.values().end());
  return Sequence(a.q(), std::move(v));
}

}  // namespace czcp
