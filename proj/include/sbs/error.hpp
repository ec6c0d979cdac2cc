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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sbs {

// Every failure the library reports carries one of these codes so callers
// (and the CLI's exit-code mapping) can branch without parsing messages.
enum class Errc {
  invalid_argument,
  no_inverse,
  singular_system,
  unknown_algorithm,
  seek_overflow,
  entropy_failure,
  insufficient_shares,
  duplicate_share,
  inconsistent_shares,
  bad_padding,
  out_of_range,
  // share file decoding
  bad_magic,
  unsupported_version,
  crc_mismatch,
  truncated,
  invalid_header,
  bad_threshold,
  bad_share_index,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sbs
