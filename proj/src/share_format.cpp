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

#include "sbs/share_format.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <string>

#include "sbs/error.hpp"

namespace sbs::share_format {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic{0x53, 0x42, 0x53, 0x31};

void put_be(std::span<std::uint8_t> out, std::uint64_t v) {
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    *it = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

std::uint64_t get_be(std::span<const std::uint8_t> in) {
  std::uint64_t v = 0;
  for (std::uint8_t b : in) v = (v << 8) | b;
  return v;
}

}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> bytes) noexcept {
  return static_cast<std::uint32_t>(::crc32_z(
      ::crc32_z(0L, Z_NULL, 0), bytes.data(), bytes.size()));
}

std::vector<std::uint8_t> encode_share(const Share& share) {
  const SchemeParams& p = share.params;
  p.validate();
  if (share.index >= p.n) {
    throw Error(Errc::invalid_argument, "share index >= n");
  }
  if (share.key_share.size() > 0xFFFF) {
    throw Error(Errc::invalid_argument, "key share longer than 65535 bytes");
  }
  rrsg::algorithm_from_id(static_cast<std::uint8_t>(share.algorithm));

  std::uint8_t flags = 0;
  if (p.dual_seed) flags |= kFlagDualSeed;
  if (p.field_policy == FieldPolicy::fixed_canonical) flags |= kFlagFixedField;

  std::array<std::uint8_t, kHeaderSize> header{};
  std::copy(kMagic.begin(), kMagic.end(), header.begin());
  header[4] = kVersion;
  header[5] = flags;
  header[6] = static_cast<std::uint8_t>(p.n);
  header[7] = static_cast<std::uint8_t>(p.m);
  header[8] = static_cast<std::uint8_t>(share.index);
  header[9] = static_cast<std::uint8_t>(share.algorithm);
  put_be(std::span(header).subspan(10, 2), share.key_share.size());
  put_be(std::span(header).subspan(12, 8), share.payload.size());
  put_be(std::span(header).subspan(20, 4),
         crc32(std::span(header).first(20)));

  std::vector<std::uint8_t> out(kHeaderSize + share.key_share.size() +
                                share.payload.size());
  auto it = std::copy(header.begin(), header.end(), out.begin());
  it = std::copy(share.key_share.begin(), share.key_share.end(), it);
  std::copy(share.payload.begin(), share.payload.end(), it);
  return out;
}

Share decode_share(std::span<const std::uint8_t> bytes) {
  const std::size_t magic_len = std::min(bytes.size(), kMagic.size());
  if (!std::equal(bytes.begin(), bytes.begin() + magic_len, kMagic.begin())) {
    throw Error(Errc::bad_magic, "not an SBS1 share file");
  }
  if (bytes.size() < kHeaderSize) {
    throw Error(Errc::truncated,
                "header needs 24 bytes, got " + std::to_string(bytes.size()));
  }
  if (bytes[4] != kVersion) {
    throw Error(Errc::unsupported_version,
                "version " + std::to_string(bytes[4]));
  }
  const auto stored_crc = static_cast<std::uint32_t>(get_be(bytes.subspan(20, 4)));
  if (crc32(bytes.first(20)) != stored_crc) {
    throw Error(Errc::crc_mismatch, "header checksum does not match");
  }

  const std::uint8_t flags = bytes[5];
  if ((flags & ~(kFlagDualSeed | kFlagFixedField)) != 0) {
    throw Error(Errc::invalid_header, "reserved flag bits set");
  }
  Share share;
  share.params.n = bytes[6];
  share.params.m = bytes[7];
  share.params.dual_seed = (flags & kFlagDualSeed) != 0;
  share.params.field_policy = (flags & kFlagFixedField) != 0
                                  ? FieldPolicy::fixed_canonical
                                  : FieldPolicy::random_per_block;
  if (share.params.m == 0 || share.params.m > share.params.n) {
    throw Error(Errc::bad_threshold,
                "m=" + std::to_string(share.params.m) +
                    " n=" + std::to_string(share.params.n));
  }
  share.index = bytes[8];
  if (share.index >= share.params.n) {
    throw Error(Errc::bad_share_index,
                "index " + std::to_string(share.index) + " >= n");
  }
  share.algorithm = rrsg::algorithm_from_id(bytes[9]);

  const std::uint64_t key_len = get_be(bytes.subspan(10, 2));
  const std::uint64_t payload_len = get_be(bytes.subspan(12, 8));
  if (key_len != key_size(share.params.dual_seed)) {
    throw Error(Errc::invalid_header,
                "key share length " + std::to_string(key_len));
  }
  const std::uint64_t body = bytes.size() - kHeaderSize;
  if (body < key_len || body - key_len < payload_len) {
    throw Error(Errc::truncated, "body shorter than declared lengths");
  }
  if (body - key_len != payload_len) {
    throw Error(Errc::invalid_header, "trailing bytes after payload");
  }
  const auto key = bytes.subspan(kHeaderSize, key_len);
  const auto payload = bytes.subspan(kHeaderSize + key_len);
  share.key_share.assign(key.begin(), key.end());
  share.payload.assign(payload.begin(), payload.end());
  return share;
}

}  // namespace sbs::share_format
