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

#include "sbs/scheme.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "sbs/error.hpp"
#include "sbs/gf.hpp"
#include "sbs/shamir.hpp"

namespace sbs {
namespace {

using gf::Word;

// Produces the m+n+4 stream words of each block. In dual-seed mode the
// mask words come from the first seed's stream (stride m) and the point
// and field words from the second (stride n+4).
class BlockSource {
 public:
  BlockSource(std::span<const std::uint8_t> seed_bytes,
              const SchemeParams& params, rrsg::Algorithm algorithm)
      : params_(params),
        primary_(rrsg::Seed::parse(seed_bytes.first(rrsg::kSeedSize)),
                 algorithm),
        words_(params.block_stride()) {
    if (params.dual_seed) {
      secondary_.emplace(
          rrsg::Seed::parse(seed_bytes.subspan(rrsg::kSeedSize)), algorithm);
    }
  }

  void seek_block(std::uint64_t block) {
    if (secondary_) {
      primary_.seek(block * params_.m);
      secondary_->seek(block * (params_.n + 4));
    } else {
      primary_.seek(block * params_.block_stride());
    }
  }

  shamir::BlockRandomness next() {
    if (secondary_) {
      primary_.next(std::span<Word>(words_).first(params_.m));
      secondary_->next(std::span<Word>(words_).subspan(params_.m));
    } else {
      primary_.next(words_);
    }
    return shamir::BlockRandomness::partition(words_, params_.n, params_.m);
  }

 private:
  SchemeParams params_;
  rrsg::Stream primary_;
  std::optional<rrsg::Stream> secondary_;
  std::vector<Word> words_;
};

// Validates a recovery set and returns the seed recovered from its first
// m shares.
std::vector<std::uint8_t> check_and_recover_seed(std::span<const Share> shares) {
  if (shares.empty()) {
    throw Error(Errc::insufficient_shares, "no shares given");
  }
  const Share& ref = shares.front();
  ref.params.validate();
  const unsigned m = ref.params.m;
  if (shares.size() < m) {
    throw Error(Errc::insufficient_shares,
                "need " + std::to_string(m) + " shares, got " +
                    std::to_string(shares.size()));
  }
  if (ref.key_share.size() != key_size(ref.params.dual_seed)) {
    throw Error(Errc::inconsistent_shares, "unexpected key share length");
  }

  std::array<bool, 256> seen{};
  for (const Share& s : shares) {
    if (s.params != ref.params || s.algorithm != ref.algorithm ||
        s.key_share.size() != ref.key_share.size() ||
        s.payload.size() != ref.payload.size()) {
      throw Error(Errc::inconsistent_shares,
                  "shares do not come from the same split");
    }
    if (s.index >= ref.params.n) {
      throw Error(Errc::inconsistent_shares,
                  "share index " + std::to_string(s.index) + " >= n");
    }
    if (seen[s.index]) {
      throw Error(Errc::duplicate_share,
                  "share index " + std::to_string(s.index) + " repeated");
    }
    seen[s.index] = true;
  }

  std::vector<shamir::KeyShare> key_shares;
  key_shares.reserve(m);
  for (const Share& s : shares.first(m)) {
    key_shares.push_back({s.index, s.key_share});
  }
  return shamir::recover_key(key_shares, m, ref.key_share.size());
}

std::vector<std::uint8_t> decode_blocks(std::span<const Share> shares,
                                        std::span<const std::uint8_t> seed,
                                        std::uint64_t block_start,
                                        std::uint64_t block_count) {
  const Share& ref = shares.front();
  const SchemeParams& params = ref.params;
  const unsigned m = params.m;

  BlockSource source(seed, params, ref.algorithm);
  source.seek_block(block_start);

  std::vector<std::uint8_t> out;
  out.reserve(block_count * m);
  std::vector<Word> xs(m), ys(m);
  for (std::uint64_t b = block_start; b < block_start + block_count; ++b) {
    const auto r = source.next();
    const auto points = shamir::derive_eval_points(r.point_words);
    for (unsigned i = 0; i < m; ++i) {
      xs[i] = points[shares[i].index];
      ys[i] = shares[i].payload[b];
    }
    const auto& field =
        gf::tables(shamir::select_field(r.field_words, params.field_policy));
    const auto coeffs = shamir::interpolate_block(xs, ys, field);
    for (unsigned i = 0; i < m; ++i) {
      out.push_back(gf::add(coeffs[i], r.mask_words[i]));
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> pad(std::span<const std::uint8_t> message,
                              unsigned m) {
  if (m < 1 || m > 255) throw Error(Errc::invalid_argument, "m out of range");
  const auto p = static_cast<std::uint8_t>(m - message.size() % m);
  std::vector<std::uint8_t> out(message.begin(), message.end());
  out.insert(out.end(), p, p);
  return out;
}

std::vector<std::uint8_t> unpad(std::span<const std::uint8_t> padded,
                                unsigned m) {
  if (m < 1 || m > 255) throw Error(Errc::invalid_argument, "m out of range");
  if (padded.empty() || padded.size() % m != 0) {
    throw Error(Errc::bad_padding,
                "padded length " + std::to_string(padded.size()) +
                    " is not a positive multiple of " + std::to_string(m));
  }
  const std::uint8_t p = padded.back();
  if (p < 1 || p > m) {
    throw Error(Errc::bad_padding, "pad byte out of range");
  }
  const auto tail = padded.last(p);
  if (std::any_of(tail.begin(), tail.end(),
                  [p](std::uint8_t b) { return b != p; })) {
    throw Error(Errc::bad_padding, "inconsistent pad bytes");
  }
  return {padded.begin(), padded.end() - p};
}

std::vector<Share> split(std::span<const std::uint8_t> message,
                         const SchemeParams& params, rrsg::Algorithm algorithm,
                         const EntropySource& entropy) {
  params.validate();
  const unsigned n = params.n;
  const unsigned m = params.m;

  std::vector<std::uint8_t> seed(key_size(params.dual_seed));
  entropy(seed);
  auto key_shares = shamir::split_key(seed, n, m, entropy);

  const auto padded = pad(message, m);
  const std::size_t blocks = padded.size() / m;

  std::vector<Share> shares(n);
  for (unsigned i = 0; i < n; ++i) {
    shares[i].params = params;
    shares[i].index = i;
    shares[i].algorithm = algorithm;
    shares[i].key_share = std::move(key_shares[i]);
    shares[i].payload.resize(blocks);
  }

  BlockSource source(seed, params, algorithm);
  std::vector<Word> coeffs(m), ys(n);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto r = source.next();
    for (unsigned i = 0; i < m; ++i) {
      coeffs[i] = gf::add(padded[b * m + i], r.mask_words[i]);
    }
    const auto points = shamir::derive_eval_points(r.point_words);
    const auto& field =
        gf::tables(shamir::select_field(r.field_words, params.field_policy));
    shamir::eval_block(coeffs, points.values(), field, ys);
    for (unsigned i = 0; i < n; ++i) shares[i].payload[b] = ys[i];
  }
  std::fill(seed.begin(), seed.end(), 0);
  return shares;
}

std::vector<std::uint8_t> combine(std::span<const Share> shares) {
  auto seed = check_and_recover_seed(shares);
  const auto padded =
      decode_blocks(shares, seed, 0, shares.front().payload.size());
  std::fill(seed.begin(), seed.end(), 0);
  return unpad(padded, shares.front().params.m);
}

std::vector<std::uint8_t> recover_range(std::span<const Share> shares,
                                        std::uint64_t block_start,
                                        std::uint64_t block_count) {
  auto seed = check_and_recover_seed(shares);
  const std::uint64_t blocks = shares.front().payload.size();
  if (block_start >= blocks || block_count > blocks - block_start) {
    throw Error(Errc::out_of_range,
                "blocks [" + std::to_string(block_start) + ", +" +
                    std::to_string(block_count) + ") exceed " +
                    std::to_string(blocks));
  }
  auto out = decode_blocks(shares, seed, block_start, block_count);
  std::fill(seed.begin(), seed.end(), 0);
  return out;
}

}  // namespace sbs
