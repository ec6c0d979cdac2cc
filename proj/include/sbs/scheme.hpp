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

#include "sbs/params.hpp"
#include "sbs/rrsg.hpp"

/// End-to-end split and recovery: seed generation, padding, per-block
/// stream consumption and seekable range recovery.
namespace sbs {

struct Share {
  SchemeParams params;
  unsigned index = 0;  // 0..n-1
  rrsg::Algorithm algorithm = rrsg::Algorithm::stream_cipher;
  std::vector<std::uint8_t> key_share;  // 44 bytes, or 88 in dual-seed mode
  std::vector<std::uint8_t> payload;    // one word per block

  friend bool operator==(const Share&, const Share&) = default;
};

/// Serialized seed material size for the given mode.
constexpr std::size_t key_size(bool dual_seed) noexcept {
  return dual_seed ? 2 * rrsg::kSeedSize : rrsg::kSeedSize;
}

/// Appends p bytes of value p, p = m - (size mod m), so p is in [1, m].
std::vector<std::uint8_t> pad(std::span<const std::uint8_t> message,
                              unsigned m);
/// Throws Errc::bad_padding if the trailer is not a valid pad.
std::vector<std::uint8_t> unpad(std::span<const std::uint8_t> padded,
                                unsigned m);

/// Splits `message` into params.n shares using a fresh seed from `entropy`.
std::vector<Share> split(std::span<const std::uint8_t> message,
                         const SchemeParams& params,
                         rrsg::Algorithm algorithm = rrsg::Algorithm::stream_cipher,
                         const EntropySource& entropy = system_entropy);

/// Recovers the original message from at least m shares of one split.
/// Shares beyond the first m are checked for consistency but not used.
std::vector<std::uint8_t> combine(std::span<const Share> shares);

/// Raw padded plaintext of blocks [block_start, block_start + block_count).
/// Each block is m bytes; padding in the final block is not stripped.
std::vector<std::uint8_t> recover_range(std::span<const Share> shares,
                                        std::uint64_t block_start,
                                        std::uint64_t block_count);

}  // namespace sbs
