// Copyright 2026 The sbs Authors.
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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

/// Arithmetic in GF(2^8) under any of its 30 irreducible reduction
/// polynomials ("isomorphic fields"), plus the counting and enumeration
/// of irreducible polynomials over GF(2).
namespace sbs::gf {

using Word = std::uint8_t;

inline constexpr unsigned kDegree = 8;
inline constexpr std::size_t kFieldCount = 30;
inline constexpr unsigned kGroupOrder = 255;

/// A GF(2^8) representation identified by its reduction polynomial.
/// Bit i of the encoding is the coefficient of x^i; bit 8 is always set.
class FieldSpec {
 public:
  /// Throws Errc::invalid_argument unless `reduction_poly` is an
  /// irreducible polynomial of degree exactly 8.
  explicit FieldSpec(std::uint16_t reduction_poly);

  /// Field at position `index` of the canonical (ascending) enumeration.
  static FieldSpec from_index(std::size_t index);

  std::uint16_t reduction_poly() const noexcept { return poly_; }
  static constexpr unsigned degree() noexcept { return kDegree; }

  /// Position in the canonical enumeration, 0..29.
  std::size_t index() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  std::uint16_t poly_;
};

/// Möbius function. Throws Errc::invalid_argument for k == 0.
int mobius(std::uint64_t k);

/// Number of monic irreducible polynomials of `degree` over GF(2), by
/// the Gauss counting formula (1/n) * sum_{d|n} mu(n/d) 2^d. Valid for
/// degrees 1..30.
std::uint64_t count_irreducible(unsigned degree);

/// Trial division by every polynomial of degree 1..deg(poly)/2.
/// `poly` must have degree >= 1.
bool is_irreducible(std::uint32_t poly);

/// All irreducible polynomials of `degree` sorted ascending by encoding.
/// Only degree 8 is supported.
std::vector<FieldSpec> enumerate_irreducible(unsigned degree = kDegree);

/// The 30 degree-8 fields in canonical order; computed once.
std::span<const FieldSpec> canonical_fields();

constexpr Word add(Word a, Word b) noexcept { return a ^ b; }

/// Shift-and-reduce multiplication; the reference path for the tables.
Word mul(FieldSpec field, Word a, Word b) noexcept;

/// Throws Errc::no_inverse for a == 0.
Word inv(FieldSpec field, Word a);

/// Discrete log / exponent tables for one field. Immutable once built.
class FieldTables {
 public:
  static constexpr std::uint16_t kLogUndefined = 0xFFFF;

  explicit FieldTables(FieldSpec field);

  FieldSpec field() const noexcept { return field_; }
  Word generator() const noexcept { return generator_; }

  /// exp()[k] = g^k for k in [0, 254].
  std::span<const Word, kGroupOrder> exp() const noexcept {
    return std::span<const Word, kGroupOrder>(exp_.data(), kGroupOrder);
  }
  /// log()[a] for a != 0; log()[0] == kLogUndefined.
  const std::array<std::uint16_t, 256>& log() const noexcept { return log_; }

  Word mul(Word a, Word b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  /// Throws Errc::no_inverse for a == 0.
  Word inv(Word a) const;

  /// a / b. Throws Errc::no_inverse for b == 0.
  Word div(Word a, Word b) const;

 private:
  FieldSpec field_;
  Word generator_ = 0;
  // Doubled so mul() can index log a + log b without a modulo.
  std::array<Word, 2 * kGroupOrder> exp_{};
  std::array<std::uint16_t, 256> log_{};
};

FieldTables build_tables(FieldSpec field);

/// Shared tables for canonical field `index`; built once, thread-safe.
const FieldTables& tables(std::size_t index);

}  // namespace sbs::gf
