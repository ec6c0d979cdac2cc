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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sbs/gf.hpp"
#include "sbs/params.hpp"

/// Block-level mathematics: classic Shamir for the seed material and the
/// packed block transform (mask, evaluation points, field choice,
/// evaluation, interpolation).
namespace sbs::shamir {

using gf::Word;

/// Canonical field used for key splitting; key share i sits at x = i + 1.
inline constexpr std::size_t kKeyField = 0;

struct KeyShare {
  unsigned index = 0;  // share index; evaluation point is index + 1
  std::span<const Word> bytes;
};

/// Per-byte Shamir over canonical field 0 with degree m-1 polynomials whose
/// non-constant coefficients come from `entropy` (m-1 bytes per key byte,
/// drawn coefficient-major per key byte). Returns n shares of key.size().
std::vector<std::vector<Word>> split_key(std::span<const Word> key, unsigned n,
                                         unsigned m,
                                         const EntropySource& entropy);

/// Lagrange interpolation at x = 0 over the first m shares.
/// Errors: insufficient_shares, duplicate_share, invalid_argument.
std::vector<Word> recover_key(std::span<const KeyShare> shares, unsigned m,
                              std::size_t key_len);

/// Element-wise XOR; also undoes itself. Throws on length mismatch.
std::vector<Word> mask_words(std::span<const Word> data,
                             std::span<const Word> mask);

/// The m+n+4 words one block draws from the stream.
struct BlockRandomness {
  std::span<const Word> mask_words;   // r_0 .. r_{m-1}
  std::span<const Word> point_words;  // r_m .. r_{m+n-1}
  std::span<const Word, 4> field_words;

  /// Partitions a contiguous m+n+4 word slice.
  static BlockRandomness partition(std::span<const Word> words, unsigned n,
                                   unsigned m);
};

/// n pairwise distinct evaluation points, all in [1, 255].
class EvalPoints {
 public:
  std::span<const Word> values() const noexcept { return x_; }
  std::size_t size() const noexcept { return x_.size(); }
  Word operator[](std::size_t i) const noexcept { return x_[i]; }

 private:
  friend EvalPoints derive_eval_points(std::span<const Word> point_words);
  std::vector<Word> x_;
};

/// x_i = 1 + (w_i mod 255) in index order; a collision probes upward
/// (wrapping 255 -> 1) to the next unused point. No extra randomness is
/// consumed. Throws Errc::invalid_argument for more than 255 words.
EvalPoints derive_eval_points(std::span<const Word> point_words);

/// Canonical field index: big-endian u32 of the four words mod 30, or 0
/// under FieldPolicy::fixed_canonical.
std::size_t select_field(std::span<const Word, 4> field_words,
                         FieldPolicy policy) noexcept;

/// Horner evaluation of sum a_i x^i.
Word eval_point(std::span<const Word> coeffs, Word x,
                const gf::FieldTables& field) noexcept;

void eval_block(std::span<const Word> coeffs, std::span<const Word> points,
                const gf::FieldTables& field, std::span<Word> out);
std::vector<Word> eval_block(std::span<const Word> coeffs,
                             std::span<const Word> points,
                             const gf::FieldTables& field);

/// Solves the Vandermonde system for the unique degree < points.size()
/// polynomial through (points[i], values[i]) by Gaussian elimination.
/// Throws Errc::singular_system for repeated points.
std::vector<Word> interpolate_block(std::span<const Word> points,
                                    std::span<const Word> values,
                                    const gf::FieldTables& field);

}  // namespace sbs::shamir
