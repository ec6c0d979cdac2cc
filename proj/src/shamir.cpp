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

#include "sbs/shamir.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "sbs/error.hpp"

namespace sbs::shamir {

std::vector<std::vector<Word>> split_key(std::span<const Word> key, unsigned n,
                                         unsigned m,
                                         const EntropySource& entropy) {
  SchemeParams{.n = n, .m = m}.validate();
  const auto& field = gf::tables(kKeyField);

  std::vector<std::vector<Word>> shares(n, std::vector<Word>(key.size()));
  std::vector<Word> coeffs(m);
  for (std::size_t b = 0; b < key.size(); ++b) {
    coeffs[0] = key[b];
    if (m > 1) entropy(std::span<Word>(coeffs).subspan(1));
    for (unsigned i = 0; i < n; ++i) {
      shares[i][b] = eval_point(coeffs, static_cast<Word>(i + 1), field);
    }
  }
  return shares;
}

std::vector<Word> recover_key(std::span<const KeyShare> shares, unsigned m,
                              std::size_t key_len) {
  if (m < 1 || m > 255) {
    throw Error(Errc::invalid_argument, "threshold out of range");
  }
  if (shares.size() < m) {
    throw Error(Errc::insufficient_shares,
                "need " + std::to_string(m) + " key shares, got " +
                    std::to_string(shares.size()));
  }
  std::array<bool, 256> seen{};
  for (const auto& s : shares.first(m)) {
    if (s.index > 254) {
      throw Error(Errc::invalid_argument,
                  "share index " + std::to_string(s.index) + " > 254");
    }
    if (seen[s.index]) {
      throw Error(Errc::duplicate_share,
                  "share index " + std::to_string(s.index) + " repeated");
    }
    seen[s.index] = true;
    if (s.bytes.size() != key_len) {
      throw Error(Errc::inconsistent_shares, "key share length mismatch");
    }
  }

  const auto& field = gf::tables(kKeyField);
  // Lagrange basis at zero: l_j(0) = prod_{k != j} x_k / (x_k - x_j).
  std::vector<Word> basis(m);
  for (unsigned j = 0; j < m; ++j) {
    const auto xj = static_cast<Word>(shares[j].index + 1);
    Word num = 1, den = 1;
    for (unsigned k = 0; k < m; ++k) {
      if (k == j) continue;
      const auto xk = static_cast<Word>(shares[k].index + 1);
      num = field.mul(num, xk);
      den = field.mul(den, gf::add(xk, xj));
    }
    basis[j] = field.div(num, den);
  }

  std::vector<Word> key(key_len, 0);
  for (std::size_t b = 0; b < key_len; ++b) {
    Word acc = 0;
    for (unsigned j = 0; j < m; ++j) {
      acc ^= field.mul(shares[j].bytes[b], basis[j]);
    }
    key[b] = acc;
  }
  return key;
}

std::vector<Word> mask_words(std::span<const Word> data,
                             std::span<const Word> mask) {
  if (data.size() != mask.size()) {
    throw Error(Errc::invalid_argument, "mask length mismatch");
  }
  std::vector<Word> out(data.size());
  std::transform(data.begin(), data.end(), mask.begin(), out.begin(),
                 [](Word d, Word r) { return gf::add(d, r); });
  return out;
}

BlockRandomness BlockRandomness::partition(std::span<const Word> words,
                                           unsigned n, unsigned m) {
  if (words.size() != std::size_t{m} + n + 4) {
    throw Error(Errc::invalid_argument, "block randomness must be m+n+4 words");
  }
  return BlockRandomness{words.first(m), words.subspan(m, n),
                         words.subspan(m + n).first<4>()};
}

EvalPoints derive_eval_points(std::span<const Word> point_words) {
  if (point_words.size() > gf::kGroupOrder) {
    throw Error(Errc::invalid_argument, "more than 255 evaluation points");
  }
  EvalPoints points;
  points.x_.reserve(point_words.size());
  std::array<bool, 256> used{};
  for (Word w : point_words) {
    unsigned x = 1 + w % gf::kGroupOrder;
    while (used[x]) x = 1 + x % gf::kGroupOrder;
    used[x] = true;
    points.x_.push_back(static_cast<Word>(x));
  }
  return points;
}

std::size_t select_field(std::span<const Word, 4> field_words,
                         FieldPolicy policy) noexcept {
  if (policy == FieldPolicy::fixed_canonical) return 0;
  const std::uint32_t selector = std::uint32_t{field_words[0]} << 24 |
                                 std::uint32_t{field_words[1]} << 16 |
                                 std::uint32_t{field_words[2]} << 8 |
                                 std::uint32_t{field_words[3]};
  return selector % gf::kFieldCount;
}

Word eval_point(std::span<const Word> coeffs, Word x,
                const gf::FieldTables& field) noexcept {
  Word acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = gf::add(field.mul(acc, x), *it);
  }
  return acc;
}

void eval_block(std::span<const Word> coeffs, std::span<const Word> points,
                const gf::FieldTables& field, std::span<Word> out) {
  if (out.size() != points.size()) {
    throw Error(Errc::invalid_argument, "output size != point count");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = eval_point(coeffs, points[i], field);
  }
}

std::vector<Word> eval_block(std::span<const Word> coeffs,
                             std::span<const Word> points,
                             const gf::FieldTables& field) {
  std::vector<Word> out(points.size());
  eval_block(coeffs, points, field, out);
  return out;
}

std::vector<Word> interpolate_block(std::span<const Word> points,
                                    std::span<const Word> values,
                                    const gf::FieldTables& field) {
  const std::size_t m = points.size();
  if (values.size() != m || m == 0) {
    throw Error(Errc::invalid_argument, "points/values size mismatch");
  }
  // Row i: [1, x_i, x_i^2, ..., x_i^{m-1} | y_i]
  const std::size_t cols = m + 1;
  std::vector<Word> a(m * cols);
  for (std::size_t i = 0; i < m; ++i) {
    Word p = 1;
    for (std::size_t j = 0; j < m; ++j) {
      a[i * cols + j] = p;
      p = field.mul(p, points[i]);
    }
    a[i * cols + m] = values[i];
  }

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == m) {
      throw Error(Errc::singular_system, "evaluation points are not distinct");
    }
    if (pivot != col) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + col * cols);
    }
    const Word scale = field.inv(a[col * cols + col]);
    for (std::size_t j = col; j < cols; ++j) {
      a[col * cols + j] = field.mul(a[col * cols + j], scale);
    }
    for (std::size_t r = 0; r < m; ++r) {
      const Word f = a[r * cols + col];
      if (r == col || f == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        a[r * cols + j] ^= field.mul(f, a[col * cols + j]);
      }
    }
  }

  std::vector<Word> coeffs(m);
  for (std::size_t i = 0; i < m; ++i) coeffs[i] = a[i * cols + m];
  return coeffs;
}

}  // namespace sbs::shamir
