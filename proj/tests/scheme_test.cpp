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

#include <gtest/gtest.h>

#include <random>
#include <string_view>

#include "oracles.hpp"
#include "sbs/error.hpp"
#include "sbs/gf.hpp"
#include "sbs/shamir.hpp"

namespace sbs {
namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) {
  return {s.begin(), s.end()};
}

std::vector<std::uint8_t> hex(std::string_view text) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i + 1 < text.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(
        std::stoi(std::string(text.substr(i, 2)), nullptr, 16)));
  }
  return out;
}

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::invalid_argument;
}

TEST(Pad, Examples) {
  EXPECT_EQ(pad({}, 4), std::vector<std::uint8_t>(4, 0x04));
  EXPECT_EQ(pad(std::vector<std::uint8_t>{1, 2, 3}, 4),
            (std::vector<std::uint8_t>{1, 2, 3, 1}));
  EXPECT_EQ(pad(std::vector<std::uint8_t>{1, 2}, 2),
            (std::vector<std::uint8_t>{1, 2, 2, 2}));
}

TEST(Pad, RoundTripAllThresholds) {
  std::mt19937 rng(21);
  for (unsigned m = 1; m <= 255; ++m) {
    std::vector<std::uint8_t> msg(rng() % 600);
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
    const auto padded = pad(msg, m);
    ASSERT_EQ(padded.size() % m, 0u);
    ASSERT_GT(padded.size(), msg.size());
    ASSERT_EQ(unpad(padded, m), msg);
  }
}

TEST(Unpad, Rejects) {
  EXPECT_EQ(error_code([] { unpad({}, 3); }), Errc::bad_padding);
  EXPECT_EQ(error_code([] { unpad(std::vector<std::uint8_t>{1, 1}, 3); }),
            Errc::bad_padding);
  EXPECT_EQ(error_code([] { unpad(std::vector<std::uint8_t>{1, 2, 0}, 3); }),
            Errc::bad_padding);
  EXPECT_EQ(error_code([] { unpad(std::vector<std::uint8_t>{1, 2, 4}, 3); }),
            Errc::bad_padding);
  EXPECT_EQ(error_code([] { unpad(std::vector<std::uint8_t>{1, 3, 2}, 3); }),
            Errc::bad_padding);
}

TEST(Split, PayloadSizes) {
  const SchemeParams p{.n = 5, .m = 3};
  for (std::size_t len : {0u, 1u, 2u, 3u, 10u, 300u}) {
    const auto shares = split(std::vector<std::uint8_t>(len, 7), p);
    ASSERT_EQ(shares.size(), 5u);
    for (unsigned i = 0; i < 5; ++i) {
      EXPECT_EQ(shares[i].index, i);
      EXPECT_EQ(shares[i].key_share.size(), 44u);
      EXPECT_EQ(shares[i].payload.size(), len / 3 + 1);
    }
  }
  // Empty message: one all-padding block. Exactly m bytes: two blocks.
  EXPECT_EQ(split({}, SchemeParams{.n = 4, .m = 4})[0].payload.size(), 1u);
  EXPECT_EQ(split(std::vector<std::uint8_t>(4), SchemeParams{.n = 4, .m = 4})[0]
                .payload.size(),
            2u);
  EXPECT_EQ(split({}, SchemeParams{.n = 2, .m = 1, .dual_seed = true})[0]
                .key_share.size(),
            88u);
}

TEST(Split, InvalidParams) {
  EXPECT_EQ(error_code([] { split({}, SchemeParams{.n = 2, .m = 3}); }),
            Errc::invalid_argument);
  EXPECT_EQ(error_code([] { split({}, SchemeParams{.n = 300, .m = 3}); }),
            Errc::invalid_argument);
}

TEST(Split, EntropyFailurePropagates) {
  const auto failing = [](std::span<std::uint8_t>) {
    throw Error(Errc::entropy_failure, "no entropy");
  };
  EXPECT_EQ(error_code([&] {
              split({}, SchemeParams{.n = 2, .m = 2},
                    rrsg::Algorithm::stream_cipher, failing);
            }),
            Errc::entropy_failure);
}

// Golden bytes from tests/tools/reference_split.py, an independent Python
// implementation of the block procedure.
TEST(Split, MatchesIndependentReference) {
  const auto msg = bytes_of("short secret sharing");
  const char* expected[] = {"be66ff7d49b80d", "eeac104b911dbd",
                            "8a6797c609dce0", "db6e3282a4b068"};
  const char* expected_key[] = {"0100030205040706", "ece1a6abb8b5929f",
                                "ede0a7aab9b4939e", "567fffd6a9805b72"};
  const auto shares = split(msg, SchemeParams{.n = 4, .m = 3},
                            rrsg::Algorithm::test_lcg, testing::CountingEntropy{});
  for (unsigned i = 0; i < 4; ++i) {
    EXPECT_EQ(shares[i].payload, hex(expected[i])) << i;
    EXPECT_EQ(std::vector<std::uint8_t>(shares[i].key_share.begin(),
                                        shares[i].key_share.begin() + 8),
              hex(expected_key[i]));
  }

  const char* fixed[] = {"023e0f1f59eec3", "ce3a9c5d8eebb7", "1ef174abcf7a8c",
                         "c813cf8e65ae0b"};
  const auto fixed_shares =
      split(msg,
            SchemeParams{.n = 4, .m = 3,
                         .field_policy = FieldPolicy::fixed_canonical},
            rrsg::Algorithm::test_lcg, testing::CountingEntropy{});
  for (unsigned i = 0; i < 4; ++i) {
    EXPECT_EQ(fixed_shares[i].payload, hex(fixed[i])) << i;
  }
}

TEST(Combine, RoundTripVariants) {
  std::mt19937 rng(22);
  for (bool dual : {false, true}) {
    for (auto policy :
         {FieldPolicy::random_per_block, FieldPolicy::fixed_canonical}) {
      for (auto alg : {rrsg::Algorithm::stream_cipher, rrsg::Algorithm::test_lcg}) {
        const SchemeParams p{.n = 7, .m = 4, .field_policy = policy,
                             .dual_seed = dual};
        std::vector<std::uint8_t> msg(1 + rng() % 5000);
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
        auto shares = split(msg, p, alg);
        std::shuffle(shares.begin(), shares.end(), rng);
        EXPECT_EQ(combine(std::span(shares).first(4)), msg);
        EXPECT_EQ(combine(shares), msg);  // extra shares are fine
      }
    }
  }
}

TEST(Combine, OneMegabyte) {
  std::mt19937 rng(23);
  std::vector<std::uint8_t> msg(1 << 20);
  for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
  const auto shares = split(msg, SchemeParams{.n = 5, .m = 3});
  const std::vector<Share> subset{shares[4], shares[0], shares[2]};
  EXPECT_EQ(combine(subset), msg);
}

TEST(Combine, ThresholdAndConsistencyErrors) {
  const auto msg = bytes_of("threshold");
  const auto shares = split(msg, SchemeParams{.n = 5, .m = 3});
  EXPECT_EQ(error_code([&] { combine(std::span(shares).first(2)); }),
            Errc::insufficient_shares);
  EXPECT_EQ(error_code([&] { combine(std::span<const Share>{}); }),
            Errc::insufficient_shares);

  const std::vector<Share> dup{shares[0], shares[1], shares[1]};
  EXPECT_EQ(error_code([&] { combine(dup); }), Errc::duplicate_share);

  auto truncated = shares;
  truncated[1].payload.pop_back();
  EXPECT_EQ(error_code([&] { combine(truncated); }), Errc::inconsistent_shares);

  const auto other = split(msg, SchemeParams{.n = 5, .m = 2});
  const std::vector<Share> mixed_params{shares[0], shares[1], other[2]};
  EXPECT_EQ(error_code([&] { combine(mixed_params); }),
            Errc::inconsistent_shares);
}

TEST(Combine, SharesFromDifferentSplitsFailPadding) {
  // Deterministic entropy so the outcome does not depend on chance.
  const auto msg = bytes_of("two different splits of one message");
  const SchemeParams p{.n = 3, .m = 2};
  const auto a = split(msg, p, rrsg::Algorithm::stream_cipher,
                       testing::CountingEntropy{0});
  const auto b = split(msg, p, rrsg::Algorithm::stream_cipher,
                       testing::CountingEntropy{100});
  const std::vector<Share> mixed{a[0], b[1]};
  EXPECT_EQ(error_code([&] { combine(mixed); }), Errc::bad_padding);
}

TEST(RecoverRange, Examples) {
  std::mt19937 rng(24);
  const SchemeParams p{.n = 4, .m = 3};
  std::vector<std::uint8_t> msg(7);  // padded to 9: three blocks
  for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
  const auto padded = pad(msg, 3);
  const auto shares = split(msg, p);
  const std::vector<Share> set{shares[3], shares[1], shares[0]};

  EXPECT_EQ(recover_range(set, 0, 3), padded);
  EXPECT_EQ(recover_range(set, 1, 1),
            std::vector<std::uint8_t>(padded.begin() + 3, padded.begin() + 6));
  EXPECT_EQ(error_code([&] { recover_range(set, 3, 1); }), Errc::out_of_range);
  EXPECT_EQ(error_code([&] { recover_range(set, 2, 2); }), Errc::out_of_range);
}

TEST(RecoverRange, StrideInvariantEveryBlock) {
  std::mt19937 rng(25);
  for (bool dual : {false, true}) {
    for (auto alg : {rrsg::Algorithm::stream_cipher, rrsg::Algorithm::test_lcg}) {
      const SchemeParams p{.n = 5, .m = 2, .dual_seed = dual};
      std::vector<std::uint8_t> msg(41);
      for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
      const auto padded = pad(msg, 2);
      const auto shares = split(msg, p, alg);
      const std::vector<Share> set{shares[2], shares[4]};
      for (std::uint64_t k = 0; k < shares[0].payload.size(); ++k) {
        const auto block = recover_range(set, k, 1);
        ASSERT_EQ(block, std::vector<std::uint8_t>(padded.begin() + 2 * k,
                                                   padded.begin() + 2 * k + 2));
      }
    }
  }
}

// With the mask words known (dual seed, first seed revealed) an observer of
// one share word y can rule out some plaintexts: for m = 2 the number of
// (x, field) assignments consistent with (d0, d1) is 30 for generic pairs,
// but 0 when d0 = r0 ^ y (and d1 != r1) and 255 * 30 when d1 = r1 and
// d0 = r0 ^ y. This pins the exact leakage by exhaustive enumeration.
TEST(Secrecy, KnownMaskCountsExhaustive) {
  const gf::Word r0 = 0x3C, r1 = 0xA5, y = 0x5E;
  std::size_t generic = 0, excluded = 0, full = 0;
  for (unsigned d0 = 0; d0 < 256; ++d0) {
    for (unsigned d1 = 0; d1 < 256; ++d1) {
      const gf::Word coeffs[2] = {static_cast<gf::Word>(d0 ^ r0),
                                  static_cast<gf::Word>(d1 ^ r1)};
      unsigned count = 0;
      for (std::size_t fi = 0; fi < gf::kFieldCount; ++fi) {
        const auto& f = gf::tables(fi);
        for (unsigned x = 1; x < 256; ++x) {
          if (shamir::eval_point(coeffs, static_cast<gf::Word>(x), f) == y) {
            ++count;
          }
        }
      }
      const bool a0_is_y = coeffs[0] == y, a1_zero = coeffs[1] == 0;
      const unsigned expected = a1_zero ? (a0_is_y ? 255 * 30 : 0)
                                        : (a0_is_y ? 0 : 30);
      ASSERT_EQ(count, expected) << d0 << "," << d1;
      if (count == 30) ++generic;
      if (count == 0) ++excluded;
      if (count == 255 * 30) ++full;
    }
  }
  EXPECT_EQ(full, 1u);
  EXPECT_EQ(excluded, 255u + 255u);
  EXPECT_EQ(generic, 65536u - 511u);
}

}  // namespace
}  // namespace sbs
