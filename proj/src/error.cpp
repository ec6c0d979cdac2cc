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

#include "sbs/error.hpp"

namespace sbs {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::no_inverse: return "no inverse";
    case Errc::singular_system: return "singular system";
    case Errc::unknown_algorithm: return "unknown algorithm";
    case Errc::seek_overflow: return "seek overflow";
    case Errc::entropy_failure: return "entropy failure";
    case Errc::insufficient_shares: return "insufficient shares";
    case Errc::duplicate_share: return "duplicate share";
    case Errc::inconsistent_shares: return "inconsistent shares";
    case Errc::bad_padding: return "bad padding";
    case Errc::out_of_range: return "out of range";
    case Errc::bad_magic: return "bad magic";
    case Errc::unsupported_version: return "unsupported version";
    case Errc::crc_mismatch: return "crc mismatch";
    case Errc::truncated: return "truncated";
    case Errc::invalid_header: return "invalid header";
    case Errc::bad_threshold: return "bad threshold";
    case Errc::bad_share_index: return "bad share index";
  }
  return "unknown error";
}

}  // namespace sbs
