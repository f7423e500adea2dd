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

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ctbls/csprng.hpp"
#include "ctbls/ecsm.hpp"
#include "ctbls/errors.hpp"
#include "ctbls/hash_to_curve.hpp"
#include "ctbls/pairing.hpp"
#include "ctbls/scalar.hpp"
#include "ctbls/serialize.hpp"

namespace ctbls::bls {

// Minimal-signature-size BLS: signatures in G1, public keys in G2.
inline const DomainSeparationTag& signature_dst() {
  static const DomainSeparationTag dst(
      "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_NUL_");
  return dst;
}

struct SecretKey {
  Scalar value;
};
struct PublicKey {
  G2Point point;
};
struct Signature {
  G1Point point;
};

using Message = std::span<const std::uint8_t>;

inline Message as_message(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline SecretKey keygen(Csprng& rng) { return {rng.random_nonzero_scalar()}; }

inline PublicKey public_key(const SecretKey& sk) {
  return {ecsm(sk.value, G2Point::generator())};
}

inline Signature sign(const SecretKey& sk, Message msg) {
  return {ecsm(sk.value, hash_to_g1(msg, signature_dst()))};
}

namespace detail {

inline bool valid_public_key(const PublicKey& pk) {
  return pk.point.is_on_curve() && !pk.point.is_identity() &&
         pk.point.in_subgroup();
}
inline bool valid_signature(const Signature& sig) {
  return sig.point.is_on_curve() && sig.point.in_subgroup();
}

}  // namespace detail

// e(sig, -g2) * e(H(msg), pk) == 1, evaluated as one shared multi-pairing.
// Keys and signatures outside the prime-order subgroup are rejected before
// any pairing work.
inline bool verify(const PublicKey& pk, Message msg, const Signature& sig,
                   MultiPairingMode mode = MultiPairingMode::kSharedMLFE) {
  if (!detail::valid_public_key(pk) || !detail::valid_signature(sig)) {
    return false;
  }
  const std::array<PairingInput, 2> pairs = {
      PairingInput{sig.point, -G2Point::generator()},
      PairingInput{hash_to_g1(msg, signature_dst()), pk.point}};
  return multi_pairing(pairs, mode).is_one();
}

inline Signature aggregate(std::span<const Signature> sigs) {
  if (sigs.empty()) throw UsageError("nothing to aggregate");
  G1Point acc;
  for (const auto& s : sigs) acc = acc + s.point;
  return {acc.normalize()};
}

// n + 1 pairings sharing one Miller loop and one final exponentiation.
// Messages must be pairwise distinct; a repeat makes the check fail.
inline bool aggregate_verify(std::span<const PublicKey> pks,
                             std::span<const Message> msgs,
                             const Signature& agg,
                             MultiPairingMode mode = MultiPairingMode::kSharedMLFE) {
  if (pks.size() != msgs.size()) {
    throw UsageError("public key and message counts differ");
  }
  if (pks.empty()) throw UsageError("no signers");
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    for (std::size_t j = i + 1; j < msgs.size(); ++j) {
      if (std::ranges::equal(msgs[i], msgs[j])) return false;
    }
  }
  if (!detail::valid_signature(agg)) return false;
  for (const auto& pk : pks) {
    if (!detail::valid_public_key(pk)) return false;
  }
  std::vector<PairingInput> pairs;
  pairs.reserve(pks.size() + 1);
  pairs.emplace_back(agg.point, -G2Point::generator());
  for (std::size_t i = 0; i < pks.size(); ++i) {
    pairs.emplace_back(hash_to_g1(msgs[i], signature_dst()), pks[i].point);
  }
  return multi_pairing(pairs, mode).is_one();
}

// Raw encodings: 32-byte big-endian secret, 96-byte compressed G2 key,
// 48-byte compressed G1 signature.
inline std::array<std::uint8_t, 32> to_bytes(const SecretKey& sk) {
  return sk.value.to_bytes();
}
inline std::array<std::uint8_t, kG2CompressedBytes> to_bytes(const PublicKey& pk) {
  return serialize_compressed(pk.point);
}
inline std::array<std::uint8_t, kG1CompressedBytes> to_bytes(const Signature& s) {
  return serialize_compressed(s.point);
}

inline SecretKey secret_key_from_bytes(std::span<const std::uint8_t> b) {
  SecretKey sk{Scalar::from_bytes(b)};
  if (sk.value.is_zero()) {
    throw DecodeError(DecodeErrorKind::kMalformed, "secret key is zero");
  }
  return sk;
}
inline PublicKey public_key_from_bytes(std::span<const std::uint8_t> b) {
  if (b.size() != kG2CompressedBytes) {
    throw DecodeError(DecodeErrorKind::kMalformed, "public key must be 96 bytes");
  }
  PublicKey pk{deserialize_g2(b)};
  if (pk.point.is_identity()) {
    throw DecodeError(DecodeErrorKind::kMalformed, "public key is the identity");
  }
  return pk;
}
inline Signature signature_from_bytes(std::span<const std::uint8_t> b) {
  if (b.size() != kG1CompressedBytes) {
    throw DecodeError(DecodeErrorKind::kMalformed, "signature must be 48 bytes");
  }
  return {deserialize_g1(b)};
}

}  // namespace ctbls::bls
