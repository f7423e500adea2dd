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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "ctbls/errors.hpp"
#include "ctbls/weierstrass.hpp"

namespace ctbls {

// Point encodings in the ZCash BLS12-381 style: the three top bits of the
// first byte are compression (0x80), infinity (0x40) and the sign of y
// (0x20, set when y is the lexicographically larger root). Fp2 values are
// written c1 then c0.

namespace detail {

inline constexpr std::uint8_t kFlagCompressed = 0x80;
inline constexpr std::uint8_t kFlagInfinity = 0x40;
inline constexpr std::uint8_t kFlagSign = 0x20;
inline constexpr std::uint8_t kFlagMask = 0xe0;

inline void put(std::span<std::uint8_t> out, const Fp& x) {
  const auto b = x.to_bytes();
  std::copy(b.begin(), b.end(), out.begin());
}
inline void put(std::span<std::uint8_t> out, const Fp2& x) {
  put(out.subspan(0, Fp::kBytes), x.c1);
  put(out.subspan(Fp::kBytes, Fp::kBytes), x.c0);
}

template <class F>
F get(std::span<const std::uint8_t> in);
template <>
inline Fp get<Fp>(std::span<const std::uint8_t> in) {
  return Fp::from_bytes(in);
}
template <>
inline Fp2 get<Fp2>(std::span<const std::uint8_t> in) {
  const Fp c1 = Fp::from_bytes(in.subspan(0, Fp::kBytes));
  const Fp c0 = Fp::from_bytes(in.subspan(Fp::kBytes, Fp::kBytes));
  return Fp2(c0, c1);
}

template <class C>
constexpr std::size_t kCoordBytes =
    std::is_same_v<typename C::Field, Fp> ? Fp::kBytes : 2 * Fp::kBytes;

template <class C, std::size_t Bytes>
std::array<std::uint8_t, Bytes> encode(const WeierstrassPoint<C>& p,
                                       bool compressed) {
  constexpr std::size_t n = kCoordBytes<C>;
  std::array<std::uint8_t, Bytes> out{};
  if (p.is_identity()) {
    out[0] = kFlagInfinity;
  } else {
    const auto [x, y] = p.to_affine();
    put(std::span(out).subspan(0, n), x);
    if (compressed) {
      if (y.lexicographically_largest()) out[0] |= kFlagSign;
    } else {
      put(std::span(out).subspan(n, n), y);
    }
  }
  if (compressed) out[0] |= kFlagCompressed;
  return out;
}

template <class C>
WeierstrassPoint<C> decode(std::span<const std::uint8_t> in) {
  using Point = WeierstrassPoint<C>;
  using Field = typename C::Field;
  constexpr std::size_t n = kCoordBytes<C>;
  const std::string name = C::kName;
  if (in.size() != n && in.size() != 2 * n) {
    throw DecodeError(DecodeErrorKind::kMalformed,
                      name + " encoding has wrong length");
  }
  const bool compressed = (in[0] & kFlagCompressed) != 0;
  const bool infinity = (in[0] & kFlagInfinity) != 0;
  const bool sign = (in[0] & kFlagSign) != 0;
  if (compressed != (in.size() == n)) {
    throw DecodeError(DecodeErrorKind::kMalformed,
                      name + " compression flag does not match length");
  }
  if (infinity) {
    bool rest_zero = !sign && (in[0] & ~kFlagMask) == 0;
    for (std::size_t i = 1; i < in.size(); ++i) rest_zero &= in[i] == 0;
    if (!rest_zero) {
      throw DecodeError(DecodeErrorKind::kMalformed,
                        name + " infinity encoding with nonzero payload");
    }
    return Point();
  }
  if (!compressed && sign) {
    throw DecodeError(DecodeErrorKind::kMalformed,
                      name + " sign flag on uncompressed encoding");
  }
  std::vector<std::uint8_t> xb(in.begin(), in.begin() + n);
  xb[0] &= static_cast<std::uint8_t>(~kFlagMask);
  const Field x = get<Field>(xb);
  Field y;
  if (compressed) {
    const auto root = (x.square() * x + C::b()).sqrt();
    if (!root) {
      throw DecodeError(DecodeErrorKind::kNotOnCurve,
                        name + " x has no matching y");
    }
    y = root->lexicographically_largest() == sign ? *root : -*root;
  } else {
    y = get<Field>(in.subspan(n, n));
  }
  const Point p = Point::from_projective_unchecked(x, y, Field::one());
  if (!p.is_on_curve()) {
    throw DecodeError(DecodeErrorKind::kNotOnCurve, name + " point not on curve");
  }
  if (!p.in_subgroup()) {
    throw DecodeError(DecodeErrorKind::kNotInSubgroup,
                      name + " point not in the prime-order subgroup");
  }
  return p;
}

}  // namespace detail

inline constexpr std::size_t kG1CompressedBytes = 48;
inline constexpr std::size_t kG1UncompressedBytes = 96;
inline constexpr std::size_t kG2CompressedBytes = 96;
inline constexpr std::size_t kG2UncompressedBytes = 192;

inline std::array<std::uint8_t, kG1CompressedBytes> serialize_compressed(
    const G1Point& p) {
  return detail::encode<G1Curve, kG1CompressedBytes>(p, true);
}
inline std::array<std::uint8_t, kG1UncompressedBytes> serialize_uncompressed(
    const G1Point& p) {
  return detail::encode<G1Curve, kG1UncompressedBytes>(p, false);
}
inline std::array<std::uint8_t, kG2CompressedBytes> serialize_compressed(
    const G2Point& p) {
  return detail::encode<G2Curve, kG2CompressedBytes>(p, true);
}
inline std::array<std::uint8_t, kG2UncompressedBytes> serialize_uncompressed(
    const G2Point& p) {
  return detail::encode<G2Curve, kG2UncompressedBytes>(p, false);
}

// Accepts either the compressed or the uncompressed form. Throws
// DecodeError with kind kMalformed, kNotOnCurve or kNotInSubgroup.
inline G1Point deserialize_g1(std::span<const std::uint8_t> bytes) {
  return detail::decode<G1Curve>(bytes);
}
inline G2Point deserialize_g2(std::span<const std::uint8_t> bytes) {
  return detail::decode<G2Curve>(bytes);
}

}  // namespace ctbls
