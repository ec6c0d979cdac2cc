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

#include "sbs/scheme.hpp"

/// The `.sbs1` share file. All integers big-endian.
///
///   0  magic "SBS1"
///   4  version (1)
///   5  flags: bit0 dual seed, bit1 fixed canonical field, others zero
///   6  n
///   7  m
///   8  share index
///   9  rrsg algorithm id
///  10  key share length (u16)
///  12  payload length (u64)
///  20  CRC-32 (IEEE, reflected) of bytes 0..19
///  24  key share, then payload
///
/// The CRC only guards the header against accidental corruption; nothing
/// in the file is authenticated.
namespace sbs::share_format {

inline constexpr std::size_t kHeaderSize = 24;
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::uint8_t kFlagDualSeed = 0x01;
inline constexpr std::uint8_t kFlagFixedField = 0x02;

std::uint32_t crc32(std::span<const std::uint8_t> bytes) noexcept;

/// Throws Errc::invalid_argument if a field does not fit its width or the
/// share is internally inconsistent.
std::vector<std::uint8_t> encode_share(const Share& share);

/// Errors: bad_magic, unsupported_version, crc_mismatch, truncated,
/// bad_threshold (m == 0 or m > n), bad_share_index (index >= n),
/// unknown_algorithm, invalid_header (reserved flags, key length, trailing
/// bytes).
Share decode_share(std::span<const std::uint8_t> bytes);

}  // namespace sbs::share_format
