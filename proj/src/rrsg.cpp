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

#include "sbs/rrsg.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sbs/error.hpp"

namespace sbs::rrsg {
namespace {

constexpr std::uint64_t kLcgMultiplier = 6364136223846793005ULL;
constexpr std::uint64_t kLcgIncrement = 1442695040888963407ULL;
constexpr std::uint64_t kChachaBlocks = std::uint64_t{1} << 32;

std::uint32_t load_le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 |
         std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}

void quarter_round(std::array<std::uint32_t, 16>& x, int a, int b, int c,
                   int d) {
  x[a] += x[b]; x[d] = std::rotl(x[d] ^ x[a], 16);
  x[c] += x[d]; x[b] = std::rotl(x[b] ^ x[c], 12);
  x[a] += x[b]; x[d] = std::rotl(x[d] ^ x[a], 8);
  x[c] += x[d]; x[b] = std::rotl(x[b] ^ x[c], 7);
}

// State after `steps` iterations from `state`, via affine-map squaring.
std::uint64_t lcg_jump(std::uint64_t state, std::uint64_t steps) {
  std::uint64_t acc_mul = 1, acc_add = 0;
  std::uint64_t cur_mul = kLcgMultiplier, cur_add = kLcgIncrement;
  while (steps != 0) {
    if (steps & 1U) {
      acc_mul *= cur_mul;
      acc_add = acc_add * cur_mul + cur_add;
    }
    cur_add = (cur_mul + 1) * cur_add;
    cur_mul *= cur_mul;
    steps >>= 1;
  }
  return acc_mul * state + acc_add;
}

}  // namespace

std::array<std::uint8_t, kSeedSize> Seed::serialize() const {
  std::array<std::uint8_t, kSeedSize> out{};
  std::copy(key.begin(), key.end(), out.begin());
  std::copy(nonce.begin(), nonce.end(), out.begin() + kKeySize);
  return out;
}

Seed Seed::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kSeedSize) {
    throw Error(Errc::invalid_argument,
                "seed must be 44 bytes, got " + std::to_string(bytes.size()));
  }
  Seed s;
  std::copy_n(bytes.begin(), kKeySize, s.key.begin());
  std::copy_n(bytes.begin() + kKeySize, kNonceSize, s.nonce.begin());
  return s;
}

Algorithm algorithm_from_id(std::uint8_t id) {
  switch (id) {
    case 0: return Algorithm::stream_cipher;
    case 1: return Algorithm::test_lcg;
    default:
      throw Error(Errc::unknown_algorithm,
                  "rrsg algorithm id " + std::to_string(id));
  }
}

std::string_view algorithm_name(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::stream_cipher: return "chacha20";
    case Algorithm::test_lcg: return "test-lcg";
  }
  return "unknown";
}

std::array<std::uint8_t, 64> chacha20_block(
    std::span<const std::uint8_t, kKeySize> key,
    std::span<const std::uint8_t, kNonceSize> nonce, std::uint32_t counter) {
  std::array<std::uint32_t, 16> input{0x61707865, 0x3320646e, 0x79622d32,
                                      0x6b206574};
  for (int i = 0; i < 8; ++i) input[4 + i] = load_le32(&key[4 * i]);
  input[12] = counter;
  for (int i = 0; i < 3; ++i) input[13 + i] = load_le32(&nonce[4 * i]);

  auto x = input;
  for (int round = 0; round < 10; ++round) {
    quarter_round(x, 0, 4, 8, 12);
    quarter_round(x, 1, 5, 9, 13);
    quarter_round(x, 2, 6, 10, 14);
    quarter_round(x, 3, 7, 11, 15);
    quarter_round(x, 0, 5, 10, 15);
    quarter_round(x, 1, 6, 11, 12);
    quarter_round(x, 2, 7, 8, 13);
    quarter_round(x, 3, 4, 9, 14);
  }
  std::array<std::uint8_t, 64> out{};
  for (int i = 0; i < 16; ++i) {
    const std::uint32_t v = x[i] + input[i];
    out[4 * i + 0] = static_cast<std::uint8_t>(v);
    out[4 * i + 1] = static_cast<std::uint8_t>(v >> 8);
    out[4 * i + 2] = static_cast<std::uint8_t>(v >> 16);
    out[4 * i + 3] = static_cast<std::uint8_t>(v >> 24);
  }
  return out;
}

Stream::Stream(const Seed& seed, Algorithm algorithm)
    : algorithm_(algorithm), seed_(seed) {
  // Re-validates ids that arrived through a cast.
  algorithm_from_id(static_cast<std::uint8_t>(algorithm));
  for (int i = 0; i < 8; ++i) lcg_seed_ = (lcg_seed_ << 8) | seed.key[i];
  lcg_state_ = lcg_seed_;
}

void Stream::next(std::span<std::uint8_t> out) {
  if (algorithm_ == Algorithm::stream_cipher) {
    next_chacha(out);
  } else {
    next_lcg(out);
  }
}

std::vector<std::uint8_t> Stream::next(std::size_t count) {
  std::vector<std::uint8_t> out(count);
  next(out);
  return out;
}

void Stream::seek(std::uint64_t word_offset) noexcept {
  if (algorithm_ == Algorithm::test_lcg) {
    lcg_state_ = lcg_jump(lcg_seed_, word_offset);
  }
  position_ = word_offset;
}

void Stream::next_chacha(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    const std::uint64_t block = position_ / 64;
    if (block >= kChachaBlocks) {
      throw Error(Errc::seek_overflow, "chacha20 block counter exhausted");
    }
    if (block != block_number_) {
      block_ = chacha20_block(seed_.key, seed_.nonce,
                              static_cast<std::uint32_t>(block));
      block_number_ = block;
    }
    const std::size_t offset = position_ % 64;
    const std::size_t take = std::min(out.size() - done, 64 - offset);
    std::copy_n(block_.begin() + offset, take, out.begin() + done);
    done += take;
    position_ += take;
  }
}

void Stream::next_lcg(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    lcg_state_ = lcg_state_ * kLcgMultiplier + kLcgIncrement;
    byte = static_cast<std::uint8_t>(lcg_state_ >> 33);
  }
  position_ += out.size();
}

}  // namespace sbs::rrsg
