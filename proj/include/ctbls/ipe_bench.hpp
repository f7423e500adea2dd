// Copyright 2026 The ctbls Authors.
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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ctbls/counters.hpp"
#include "ctbls/csprng.hpp"
#include "ctbls/ecsm.hpp"
#include "ctbls/endomorphism.hpp"

namespace ctbls {

// The encryption hot loop of a function-hiding inner-product scheme is one
// G2 scalar multiplication per vector entry. This runs that loop with plain
// double-and-add-always or with the skew-Frobenius split and reports the
// cost per entry.
enum class IpeMode { kPlain, kSplitScalar };

inline const char* to_string(IpeMode mode) {
  return mode == IpeMode::kPlain ? "plain" : "split";
}

inline std::vector<G2Point> ipe_encrypt(std::span<const Scalar> x,
                                        std::span<const G2Point> bases,
                                        IpeMode mode) {
  if (x.empty()) throw UsageError("vector length must be at least 1");
  if (x.size() != bases.size()) throw UsageError("vector and base lengths differ");
  std::vector<G2Point> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(mode == IpeMode::kPlain ? ecsm(x[i], bases[i])
                                          : ecsm_split(x[i], bases[i]));
  }
  return out;
}

struct IpeBenchReport {
  std::size_t vector_len = 0;
  OpCounter plain;
  OpCounter split;
  bool values_agree = false;

  double plain_per_element() const {
    return static_cast<double>(plain.m1_equivalent()) / vector_len;
  }
  double split_per_element() const {
    return static_cast<double>(split.m1_equivalent()) / vector_len;
  }
  double ratio() const { return plain_per_element() / split_per_element(); }
};

// Random vector and random affine bases drawn from rng; base generation is
// not counted.
inline IpeBenchReport ipe_encrypt_benchmark(std::size_t vector_len, Csprng& rng) {
  if (vector_len == 0) throw UsageError("vector length must be at least 1");
  std::vector<Scalar> x;
  std::vector<G2Point> bases;
  {
    Uncounted quiet;
    for (std::size_t i = 0; i < vector_len; ++i) {
      x.push_back(rng.random_scalar());
      bases.push_back(ecsm(rng.random_nonzero_scalar(), G2Point::generator()));
    }
  }
  IpeBenchReport report;
  report.vector_len = vector_len;
  Measurement m_plain;
  const auto plain = ipe_encrypt(x, bases, IpeMode::kPlain);
  report.plain = m_plain.delta();
  Measurement m_split;
  const auto split = ipe_encrypt(x, bases, IpeMode::kSplitScalar);
  report.split = m_split.delta();
  report.values_agree = plain == split;
  return report;
}

}  // namespace ctbls
