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

// sbs: split a file into share files, recombine them, inspect headers and
// list the GF(2^8) reduction polynomials.
//
// Exit codes: 0 ok, 1 usage, 2 I/O or undecodable share, 3 parameter
// validation, 4 insufficient or inconsistent shares, 5 padding failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbs/error.hpp"
#include "sbs/gf.hpp"
#include "sbs/scheme.hpp"
#include "sbs/share_format.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kParams = 3,
  kShares = 4,
  kPadding = 5,
};

struct CliFailure {
  int code;
  std::string message;
};

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kIo, "cannot read " + path.string()};
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw CliFailure{kIo, "read error on " + path.string()};
  return data;
}

void write_file(const fs::path& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw CliFailure{kIo, "cannot write " + path.string()};
}

int exit_code_for(sbs::Errc code) {
  switch (code) {
    case sbs::Errc::insufficient_shares:
    case sbs::Errc::duplicate_share:
    case sbs::Errc::inconsistent_shares:
      return kShares;
    case sbs::Errc::bad_padding:
      return kPadding;
    case sbs::Errc::invalid_argument:
    case sbs::Errc::out_of_range:
      return kParams;
    default:
      return kIo;
  }
}

sbs::Share load_share(const fs::path& path) {
  const auto bytes = read_file(path);
  try {
    return sbs::share_format::decode_share(bytes);
  } catch (const sbs::Error& e) {
    throw CliFailure{kIo, path.string() + ": " + e.what()};
  }
}

struct SplitConfig {
  unsigned n = 0;
  unsigned m = 0;
  std::string input;
  std::string output_dir = ".";
  bool dual_seed = false;
  bool fixed_field = false;
  std::string rrsg = "chacha20";
};

int cmd_split(const SplitConfig& cfg) {
  sbs::SchemeParams params{
      .n = cfg.n,
      .m = cfg.m,
      .field_policy = cfg.fixed_field ? sbs::FieldPolicy::fixed_canonical
                                      : sbs::FieldPolicy::random_per_block,
      .dual_seed = cfg.dual_seed};
  try {
    params.validate();
  } catch (const sbs::Error& e) {
    throw CliFailure{kParams, e.what()};
  }
  const auto algorithm = cfg.rrsg == "test-lcg" ? sbs::rrsg::Algorithm::test_lcg
                                                : sbs::rrsg::Algorithm::stream_cipher;
  if (algorithm == sbs::rrsg::Algorithm::test_lcg) {
    std::cerr << "WARNING: test-lcg is a predictable test generator. Shares "
                 "made with it provide NO secrecy.\n";
  }

  const fs::path input(cfg.input);
  const fs::path out_dir(cfg.output_dir);
  if (!fs::is_directory(out_dir)) {
    throw CliFailure{kIo, "output directory does not exist: " + out_dir.string()};
  }
  const auto message = read_file(input);
  const auto shares = sbs::split(message, params, algorithm);

  const std::string stem = input.stem().string();
  for (const auto& share : shares) {
    const auto path =
        out_dir / (stem + "." + std::to_string(share.index) + ".sbs1");
    write_file(path, sbs::share_format::encode_share(share));
  }
  return kOk;
}

struct CombineConfig {
  std::vector<std::string> shares;
  std::string output;
  std::string range;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto start = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const auto count_text = text.substr(colon + 1);
    const auto count = std::stoull(count_text, &used);
    if (used != count_text.size()) throw std::invalid_argument(text);
    return {start, count};
  } catch (const std::logic_error&) {
    throw CliFailure{kUsage, "--range expects START:COUNT, got '" + text + "'"};
  }
}

int cmd_combine(const CombineConfig& cfg) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
  if (!cfg.range.empty()) range = parse_range(cfg.range);

  std::vector<sbs::Share> shares;
  shares.reserve(cfg.shares.size());
  for (const auto& path : cfg.shares) shares.push_back(load_share(path));

  std::vector<std::uint8_t> out;
  try {
    out = range ? sbs::recover_range(shares, range->first, range->second)
                : sbs::combine(shares);
  } catch (const sbs::Error& e) {
    throw CliFailure{exit_code_for(e.code()), e.what()};
  }
  write_file(cfg.output, out);
  return kOk;
}

int cmd_inspect(const std::string& path) {
  const auto share = load_share(path);
  const auto& p = share.params;
  std::cout << "file:          " << path << "\n"
            << "version:       " << int{sbs::share_format::kVersion} << "\n"
            << "n:             " << p.n << "\n"
            << "m:             " << p.m << "\n"
            << "index:         " << share.index << "\n"
            << "algorithm:     " << sbs::rrsg::algorithm_name(share.algorithm)
            << "\n"
            << "field policy:  "
            << (p.field_policy == sbs::FieldPolicy::fixed_canonical
                    ? "fixed-canonical"
                    : "random-per-block")
            << "\n"
            << "dual seed:     " << (p.dual_seed ? "yes" : "no") << "\n"
            << "key share len: " << share.key_share.size() << "\n"
            << "payload len:   " << share.payload.size() << "\n"
            << "blocks:        " << share.payload.size() << "\n";
  if (share.algorithm == sbs::rrsg::Algorithm::test_lcg) {
    std::cout << "WARNING: made with the insecure test-lcg generator\n";
  }
  return kOk;
}

int cmd_fields() {
  for (const auto& field : sbs::gf::canonical_fields()) {
    std::printf("0x%03X\n", static_cast<unsigned>(field.reduction_poly()));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short secret sharing over randomized GF(2^8) fields"};
  app.require_subcommand(1);

  SplitConfig split_cfg;
  auto* split = app.add_subcommand("split", "Split a file into n share files");
  split->add_option("-n", split_cfg.n, "Number of shares")->required();
  split->add_option("-m", split_cfg.m, "Shares needed to recover")->required();
  split->add_option("input", split_cfg.input, "File to split")->required();
  split->add_option("-o,--output-dir", split_cfg.output_dir,
                    "Directory for <stem>.<index>.sbs1 files");
  split->add_flag("--dual-seed", split_cfg.dual_seed,
                  "Separate seeds for masking and for points/fields");
  split->add_flag("--fixed-field", split_cfg.fixed_field,
                  "Always use canonical field 0");
  split->add_option("--rrsg", split_cfg.rrsg, "Stream generator")
      ->check(CLI::IsMember({"chacha20", "test-lcg"}));

  CombineConfig combine_cfg;
  auto* combine = app.add_subcommand("combine", "Recover a file from shares");
  combine->add_option("shares", combine_cfg.shares, "Share files")
      ->required();
  combine->add_option("-o,--output", combine_cfg.output, "Recovered file")
      ->required();
  combine->add_option("--range", combine_cfg.range,
                      "START:COUNT blocks; writes raw padded block content");

  std::string inspect_path;
  auto* inspect = app.add_subcommand("inspect", "Print a share file header");
  inspect->add_option("share", inspect_path, "Share file")->required();

  auto* fields = app.add_subcommand("fields",
                                    "List the 30 GF(2^8) reduction polynomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*split) return cmd_split(split_cfg);
    if (*combine) return cmd_combine(combine_cfg);
    if (*inspect) return cmd_inspect(inspect_path);
    if (*fields) return cmd_fields();
  } catch (const CliFailure& f) {
    std::cerr << "sbs: " << f.message << "\n";
    return f.code;
  } catch (const sbs::Error& e) {
    std::cerr << "sbs: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "sbs: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
