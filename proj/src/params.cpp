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

#include "sbs/params.hpp"

#include <sys/random.h>

#include <cerrno>
#include <string>

#include "sbs/error.hpp"

namespace sbs {

void SchemeParams::validate() const {
  if (m < 1 || m > n || n > 255) {
    throw Error(Errc::invalid_argument,
                "need 1 <= m <= n <= 255, got n=" + std::to_string(n) +
                    " m=" + std::to_string(m));
  }
}

void system_entropy(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    const ssize_t got = ::getrandom(out.data() + done, out.size() - done, 0);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw Error(Errc::entropy_failure,
                  "getrandom failed, errno " + std::to_string(errno));
    }
    done += static_cast<std::size_t>(got);
  }
}

}  // namespace sbs
