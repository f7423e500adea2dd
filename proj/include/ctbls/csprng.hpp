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

#include <openssl/rand.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ctbls/bigint.hpp"
#include "ctbls/errors.hpp"
#include "ctbls/field.hpp"
#include "ctbls/scalar.hpp"
#include "ctbls/sha256.hpp"

namespace ctbls {

// Hash-counter generator: block i is SHA-256(seed || i) with i as a
// big-endian 64-bit integer. The counter advances once per block, so the
// same seed and counter always give the same stream.
class Csprng {
 public:
  using Seed = std::array<std::uint8_t, 32>;

  explicit Csprng(const Seed& seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  // Exactly 64 hex digits.
  static Csprng from_hex(std::string_view hex) {
    if (hex.size() != 64) throw UsageError("seed must be 64 hex digits");
    return Csprng(UInt<4>::from_hex(hex).to_bytes_be<32>());
  }

  static Csprng from_os_entropy() {
    Seed seed;
    if (RAND_bytes(seed.data(), static_cast<int>(seed.size())) != 1) {
      throw std::runtime_error("OS entropy unavailable");
    }
    return Csprng(seed);
  }

  const Seed& seed() const { return seed_; }
  std::string seed_hex() const {
    return UInt<4>::from_bytes_be(seed_).to_hex_padded(64);
  }
  std::uint64_t counter() const { return counter_; }

  Digest next_block() {
    std::array<std::uint8_t, 8> ctr;
    for (int i = 0; i < 8; ++i) {
      ctr[i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
    }
    ++counter_;
    return Sha256().update(seed_).update(ctr).finish();
  }

  void fill(std::span<std::uint8_t> out) {
    while (!out.empty()) {
      const Digest d = next_block();
      const std::size_t n = std::min(out.size(), d.size());
      std::copy_n(d.begin(), n, out.begin());
      out = out.subspan(n);
    }
  }

  // Independent generator for another owner. Consumes one block of this one.
  Csprng fork() { return Csprng(next_block()); }

  // Uniform in [0, modulus): draw ceil(bits/256) blocks, keep the low
  // bits of the big-endian value, reject and redraw when too large. The loop
  // ends with probability one but has no worst-case bound.
  template <class F>
  F random_field_element() {
    constexpr std::size_t kBits = F::modulus().bit_length();
    constexpr std::size_t kBlocks = (kBits + 255) / 256;
    for (;;) {
      std::array<std::uint8_t, 32 * kBlocks> buf;
      fill(buf);
      auto v = UInt<F::kLimbs>::from_bytes_be(
          std::span(buf).template first<F::kBytes>());
      v = v & low_mask<F::kLimbs>(kBits);
      if (v < F::modulus()) return F::from_uint(v);
    }
  }

  template <class F>
  F random_nonzero_field_element() {
    for (;;) {
      const F x = random_field_element<F>();
      if (!x.is_zero()) return x;
    }
  }

  Scalar random_scalar() {
    return Scalar::from_fq(random_field_element<Fq>());
  }
  Scalar random_nonzero_scalar() {
    return Scalar::from_fq(random_nonzero_field_element<Fq>());
  }

 private:
  template <std::size_t N>
  static constexpr UInt<N> low_mask(std::size_t bits) {
    UInt<N> m;
    for (std::size_t i = 0; i < bits; ++i) m.set_bit(i);
    return m;
  }

  Seed seed_;
  std::uint64_t counter_;
};

}  // namespace ctbls
