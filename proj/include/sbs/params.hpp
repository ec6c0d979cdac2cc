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

#include <cstdint>
#include <functional>
#include <span>

namespace sbs {

enum class FieldPolicy : std::uint8_t {
  random_per_block,  // field chosen by the block's four field words
  fixed_canonical,   // always canonical field 0; field words still consumed
};

struct SchemeParams {
  static constexpr unsigned kWordBits = 8;

  unsigned n = 0;  // shares produced
  unsigned m = 0;  // shares needed to recover
  FieldPolicy field_policy = FieldPolicy::random_per_block;
  bool dual_seed = false;

  /// Throws Errc::invalid_argument unless 1 <= m <= n <= 255.
  void validate() const;

  /// Stream words consumed per block: m + n + 4.
  std::size_t block_stride() const noexcept { return m + n + 4; }

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Fills the span with fresh random bytes or throws Errc::entropy_failure.
using EntropySource = std::function<void(std::span<std::uint8_t>)>;

/// getrandom(2)-backed entropy.
void system_entropy(std::span<std::uint8_t> out);

}  // namespace sbs
