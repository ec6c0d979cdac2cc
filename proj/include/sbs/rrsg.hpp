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
#include <string_view>
#include <vector>

/// Repeatable random sequence generators: deterministic, seekable byte
/// streams reproducible from a Seed.
namespace sbs::rrsg {

inline constexpr std::size_t kKeySize = 32;
inline constexpr std::size_t kNonceSize = 12;
inline constexpr std::size_t kSeedSize = kKeySize + kNonceSize;

struct Seed {
  std::array<std::uint8_t, kKeySize> key{};
  std::array<std::uint8_t, kNonceSize> nonce{};

  /// key || nonce
  std::array<std::uint8_t, kSeedSize> serialize() const;
  /// Throws Errc::invalid_argument unless exactly kSeedSize bytes.
  static Seed parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Wire ids; the value is stored in the share header.
enum class Algorithm : std::uint8_t {
  stream_cipher = 0,  // ChaCha20, RFC 8439 block function
  test_lcg = 1,       // 64-bit LCG; deterministic golden tests only, insecure
};

/// Throws Errc::unknown_algorithm for ids other than 0 and 1.
Algorithm algorithm_from_id(std::uint8_t id);
std::string_view algorithm_name(Algorithm algorithm) noexcept;

/// One 64-byte ChaCha20 keystream block (20 rounds, 32-bit counter).
std::array<std::uint8_t, 64> chacha20_block(
    std::span<const std::uint8_t, kKeySize> key,
    std::span<const std::uint8_t, kNonceSize> nonce, std::uint32_t counter);

/// A positioned byte stream over one seed. Single owner; not thread-safe.
/// Copying a stream forks it: both copies continue independently.
class Stream {
 public:
  Stream(const Seed& seed, Algorithm algorithm);

  Algorithm algorithm() const noexcept { return algorithm_; }
  std::uint64_t position() const noexcept { return position_; }

  /// Fills `out` with the next out.size() words and advances.
  /// ChaCha20 throws Errc::seek_overflow past 2^32 blocks (256 GiB).
  void next(std::span<std::uint8_t> out);
  std::vector<std::uint8_t> next(std::size_t count);

  /// Absolute seek; subsequent reads match a fresh stream from `word_offset`.
  void seek(std::uint64_t word_offset) noexcept;

 private:
  void next_chacha(std::span<std::uint8_t> out);
  void next_lcg(std::span<std::uint8_t> out);

  Algorithm algorithm_;
  std::uint64_t position_ = 0;

  Seed seed_;
  std::array<std::uint8_t, 64> block_{};
  std::uint64_t block_number_ = ~std::uint64_t{0};  // none cached

  std::uint64_t lcg_seed_ = 0;
  std::uint64_t lcg_state_ = 0;  // state after position_ iterations
};

}  // namespace sbs::rrsg
