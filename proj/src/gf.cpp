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

#include "sbs/gf.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sbs/error.hpp"

namespace sbs::gf {
namespace {

unsigned poly_degree(std::uint32_t p) { return std::bit_width(p) - 1; }

// Remainder of a divided by b over GF(2)[x].
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const unsigned db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) {
    a ^= b << (poly_degree(a) - db);
  }
  return a;
}

unsigned multiplicative_order(const FieldSpec& field, Word g) {
  Word x = g;
  unsigned order = 1;
  while (x != 1) {
    x = mul(field, x, g);
    ++order;
  }
  return order;
}

}  // namespace

FieldSpec::FieldSpec(std::uint16_t reduction_poly) : poly_(reduction_poly) {
  if (reduction_poly < 0x100 || reduction_poly > 0x1FF ||
      !is_irreducible(reduction_poly)) {
    throw Error(Errc::invalid_argument,
                "not an irreducible degree-8 polynomial: " +
                    std::to_string(reduction_poly));
  }
}

FieldSpec FieldSpec::from_index(std::size_t index) {
  const auto fields = canonical_fields();
  if (index >= fields.size()) {
    throw Error(Errc::invalid_argument,
                "field index " + std::to_string(index) + " >= 30");
  }
  return fields[index];
}

std::size_t FieldSpec::index() const {
  const auto fields = canonical_fields();
  const auto it = std::lower_bound(
      fields.begin(), fields.end(), poly_,
      [](FieldSpec f, std::uint16_t p) { return f.reduction_poly() < p; });
  return static_cast<std::size_t>(it - fields.begin());
}

int mobius(std::uint64_t k) {
  if (k == 0) throw Error(Errc::invalid_argument, "mobius(0) is undefined");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

std::uint64_t count_irreducible(unsigned degree) {
  if (degree < 1 || degree > 30) {
    throw Error(Errc::invalid_argument,
                "degree must be in [1, 30], got " + std::to_string(degree));
  }
  std::int64_t sum = 0;
  for (unsigned d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    sum += mobius(degree / d) * (std::int64_t{1} << d);
  }
  return static_cast<std::uint64_t>(sum / degree);
}

bool is_irreducible(std::uint32_t poly) {
  const unsigned deg = poly_degree(poly);
  if (poly == 0 || deg == 0) return false;
  // Divisors of degree 1..deg/2 are encoded in [2, 2^(deg/2 + 1)).
  const std::uint32_t limit = std::uint32_t{1} << (deg / 2 + 1);
  for (std::uint32_t d = 2; d < limit; ++d) {
    if (poly_mod(poly, d) == 0) return false;
  }
  return true;
}

std::vector<FieldSpec> enumerate_irreducible(unsigned degree) {
  if (degree != kDegree) {
    throw Error(Errc::invalid_argument,
                "only degree 8 is supported, got " + std::to_string(degree));
  }
  std::vector<FieldSpec> out;
  for (std::uint32_t p = 0x100; p <= 0x1FF; ++p) {
    if (is_irreducible(p)) out.emplace_back(static_cast<std::uint16_t>(p));
  }
  return out;
}

std::span<const FieldSpec> canonical_fields() {
  static const std::vector<FieldSpec> fields = enumerate_irreducible(kDegree);
  return fields;
}

Word mul(FieldSpec field, Word a, Word b) noexcept {
  const unsigned poly = field.reduction_poly();
  unsigned acc = 0;
  unsigned x = a;
  for (unsigned y = b; y != 0; y >>= 1) {
    if (y & 1U) acc ^= x;
    x <<= 1;
    if (x & 0x100U) x ^= poly;
  }
  return static_cast<Word>(acc);
}

Word inv(FieldSpec field, Word a) {
  if (a == 0) throw Error(Errc::no_inverse, "zero has no inverse");
  // a^254 = a^-1 in a group of order 255.
  Word result = 1;
  Word base = a;
  for (unsigned e = kGroupOrder - 1; e != 0; e >>= 1) {
    if (e & 1U) result = mul(field, result, base);
    base = mul(field, base, base);
  }
  return result;
}

FieldTables::FieldTables(FieldSpec field) : field_(field) {
  for (unsigned g = 2; g < 256; ++g) {
    if (multiplicative_order(field, static_cast<Word>(g)) == kGroupOrder) {
      generator_ = static_cast<Word>(g);
      break;
    }
  }
  log_.fill(kLogUndefined);
  Word x = 1;
  for (unsigned k = 0; k < kGroupOrder; ++k) {
    exp_[k] = x;
    exp_[k + kGroupOrder] = x;
    log_[x] = static_cast<std::uint16_t>(k);
    x = gf::mul(field, x, generator_);
  }
}

Word FieldTables::inv(Word a) const {
  if (a == 0) throw Error(Errc::no_inverse, "zero has no inverse");
  return exp_[(kGroupOrder - log_[a]) % kGroupOrder];
}

Word FieldTables::div(Word a, Word b) const {
  if (b == 0) throw Error(Errc::no_inverse, "division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + kGroupOrder - log_[b]];
}

FieldTables build_tables(FieldSpec field) { return FieldTables(field); }

const FieldTables& tables(std::size_t index) {
  static const std::vector<FieldTables> all = [] {
    std::vector<FieldTables> v;
    v.reserve(kFieldCount);
    for (const FieldSpec& f : canonical_fields()) v.emplace_back(f);
    return v;
  }();
  if (index >= all.size()) {
    throw Error(Errc::invalid_argument,
                "field index " + std::to_string(index) + " >= 30");
  }
  return all[index];
}

}  // namespace sbs::gf
