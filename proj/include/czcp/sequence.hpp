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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace czcp {

using Exponent = std::uint8_t;

// Largest supported alphabet size. Exponents are stored in one byte.
inline constexpr int kMaxModulus = 255;

// A finite q-ary sequence. Entry k realizes omega^values[k] with
// omega = exp(2*pi*i/q). Binary sequences are the q == 2 case, with
// exponent 0 for '+' and 1 for '-'.
class Sequence {
 public:
  Sequence(int q, std::vector<Exponent> values);
  Sequence(int q, std::initializer_list<int> values);

  // Parses "+-+" (binary) or "q=<q>:<e0>,<e1>,...".
  static Sequence parse(std::string_view text);
  // Binary text only; '-' and U+2212 are both accepted as minus.
  static Sequence from_signs(std::string_view signs);
  // +1/-1 realization of a binary sequence.
  static Sequence from_bipolar(std::span<const int> values);

  int q() const noexcept { return q_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool is_binary() const noexcept { return q_ == 2; }

  Exponent operator[](std::size_t i) const { return values_[i]; }
  std::span<const Exponent> values() const noexcept { return values_; }

  // +1/-1 view; throws UsageError unless binary.
  std::vector<int> bipolar() const;

  // '+'/'-' string for binary, "q=..:.." otherwise.
  std::string to_string() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  int q_;
  std::vector<Exponent> values_;
};

// Two sequences of equal length over the same alphabet.
class SequencePair {
 public:
  SequencePair(Sequence first, Sequence second);

  // Two non-empty lines, each a Sequence in text form.
  static SequencePair parse(std::string_view text);

  const Sequence& first() const noexcept { return first_; }
  const Sequence& second() const noexcept { return second_; }
  std::size_t size() const noexcept { return first_.size(); }
  int q() const noexcept { return first_.q(); }
  bool is_binary() const noexcept { return first_.is_binary(); }

  // Pair-file form: one sequence per line, trailing newline.
  std::string to_string() const;

  friend bool operator==(const SequencePair&, const SequencePair&) = default;

 private:
  Sequence first_;
  Sequence second_;
};

Sequence reverse(const Sequence& a);
// Adds q/2 to every exponent; q must be even.
Sequence negate(const Sequence& a);
Sequence conjugate(const Sequence& a);
Sequence concat(const Sequence& a, const Sequence& b);

}  // namespace czcp
