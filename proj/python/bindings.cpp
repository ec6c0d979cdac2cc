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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "sbs/error.hpp"
#include "sbs/gf.hpp"
#include "sbs/scheme.hpp"
#include "sbs/share_format.hpp"

namespace py = pybind11;

namespace {

std::vector<std::uint8_t> to_vector(const py::bytes& b) {
  const std::string_view view = b;
  return {view.begin(), view.end()};
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size()};
}

std::vector<sbs::Share> decode_all(const std::vector<py::bytes>& files) {
  std::vector<sbs::Share> shares;
  shares.reserve(files.size());
  for (const auto& f : files) {
    shares.push_back(sbs::share_format::decode_share(to_vector(f)));
  }
  return shares;
}

sbs::rrsg::Algorithm parse_rrsg(const std::string& name) {
  if (name == "chacha20") return sbs::rrsg::Algorithm::stream_cipher;
  if (name == "test-lcg") return sbs::rrsg::Algorithm::test_lcg;
  throw sbs::Error(sbs::Errc::unknown_algorithm, name);
}

}  // namespace

PYBIND11_MODULE(_sbs, m) {
  m.doc() = "Short secret sharing over randomized GF(2^8) fields";

  static py::exception<sbs::Error> error(m, "SbsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sbs::Error& e) {
      py::object exc =
          py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(sbs::to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("count_irreducible", &sbs::gf::count_irreducible, py::arg("degree"),
        "Number of irreducible polynomials of the given degree over GF(2).");

  m.def("fields", [] {
    std::vector<unsigned> out;
    for (const auto& f : sbs::gf::canonical_fields()) {
      out.push_back(f.reduction_poly());
    }
    return out;
  }, "The 30 GF(2^8) reduction polynomials in canonical order.");

  m.def(
      "split",
      [](const py::bytes& data, unsigned n, unsigned k, const std::string& rrsg,
         bool fixed_field, bool dual_seed) {
        const auto message = to_vector(data);
        const sbs::SchemeParams params{
            .n = n,
            .m = k,
            .field_policy = fixed_field ? sbs::FieldPolicy::fixed_canonical
                                        : sbs::FieldPolicy::random_per_block,
            .dual_seed = dual_seed};
        const auto algorithm = parse_rrsg(rrsg);
        std::vector<py::bytes> files;
        {
          py::gil_scoped_release release;
          const auto shares = sbs::split(message, params, algorithm);
          py::gil_scoped_acquire acquire;
          for (const auto& s : shares) {
            files.push_back(to_bytes(sbs::share_format::encode_share(s)));
          }
        }
        return files;
      },
      py::arg("data"), py::arg("n"), py::arg("m"), py::arg("rrsg") = "chacha20",
      py::arg("fixed_field") = false, py::arg("dual_seed") = false,
      "Split data into n encoded .sbs1 share files, any m of which recover it.");

  m.def(
      "combine",
      [](const std::vector<py::bytes>& files) {
        return to_bytes(sbs::combine(decode_all(files)));
      },
      py::arg("shares"), "Recover the original data from encoded share files.");

  m.def(
      "recover_range",
      [](const std::vector<py::bytes>& files, std::uint64_t start,
         std::uint64_t count) {
        return to_bytes(sbs::recover_range(decode_all(files), start, count));
      },
      py::arg("shares"), py::arg("block_start"), py::arg("block_count"),
      "Raw padded plaintext of a block range.");

  m.def(
      "inspect",
      [](const py::bytes& file) {
        const auto s = sbs::share_format::decode_share(to_vector(file));
        py::dict d;
        d["n"] = s.params.n;
        d["m"] = s.params.m;
        d["index"] = s.index;
        d["rrsg"] = std::string(sbs::rrsg::algorithm_name(s.algorithm));
        d["fixed_field"] =
            s.params.field_policy == sbs::FieldPolicy::fixed_canonical;
        d["dual_seed"] = s.params.dual_seed;
        d["key_share_len"] = s.key_share.size();
        d["payload_len"] = s.payload.size();
        return d;
      },
      py::arg("share"), "Decoded header fields of an encoded share file.");
}
