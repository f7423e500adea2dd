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
#include <string>

#include "ctbls/bigint.hpp"
#include "ctbls/errors.hpp"
#include "ctbls/field.hpp"

namespace ctbls {

// An integer modulo q held as its canonical value. ECSM processes all 255
// bits regardless of the value.
class Scalar {
 public:
  static constexpr std::size_t kBits = 255;
  static constexpr std::size_t kBytes = 32;
  using Int = UInt<4>;
  using Bytes = std::array<std::uint8_t, kBytes>;

  constexpr Scalar() = default;

  static constexpr Scalar from_uint(const Int& v) {
    if (v >= FqParams::kModulus) throw UsageError("scalar not below q");
    Scalar s;
    s.v_ = v;
    return s;
  }
  // Reduces any 256-bit value mod q.
  static constexpr Scalar reduce(const Int& v) {
    return from_uint(mod(v, FqParams::kModulus));
  }
  static constexpr Scalar from_u64(std::uint64_t v) { return from_uint(Int(v)); }
  static constexpr Scalar from_hex(std::string_view hex) {
    return from_uint(Int::from_hex(hex));
  }
  static Scalar from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBytes) {
      throw DecodeError(DecodeErrorKind::kMalformed, "scalar must be 32 bytes");
    }
    const Int v = Int::from_bytes_be(bytes);
    if (v >= FqParams::kModulus) {
      throw DecodeError(DecodeErrorKind::kMalformed, "scalar not below q");
    }
    return from_uint(v);
  }
  static Scalar from_fq(const Fq& x) { return from_uint(x.to_uint()); }

  Fq to_fq() const { return Fq::from_uint(v_); }
  constexpr const Int& value() const { return v_; }
  Bytes to_bytes() const { return v_.to_bytes_be<kBytes>(); }
  std::string to_hex() const { return v_.to_hex_padded(64); }

  constexpr bool is_zero() const { return v_.is_zero(); }

  friend constexpr bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Int v_;
};

// All ones if bit i of k is set. No branch on the bit.
template <std::size_t N>
constexpr std::uint64_t bit_mask(const UInt<N>& k, std::size_t i) {
  return std::uint64_t{0} - ((k.limb[i / 64] >> (i % 64)) & 1);
}

}  // namespace ctbls
