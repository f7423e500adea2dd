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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>

#include "ctbls/bigint.hpp"
#include "ctbls/cios.hpp"
#include "ctbls/counters.hpp"
#include "ctbls/errors.hpp"

namespace ctbls {

enum class FieldTag { kBase, kScalar };

// Base field of BLS12-381, 381 bits.
struct FpParams {
  static constexpr FieldTag kTag = FieldTag::kBase;
  static constexpr std::size_t kLimbs = 6;
  static constexpr std::size_t kBytes = 48;
  static constexpr unsigned kDatapathBits = 384;
  static constexpr UInt<6> kModulus = UInt<6>::from_hex(
      "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabff"
      "feb153ffffb9feffffffffaaab");
  static constexpr OpKind kMul = OpKind::kFpMul;
  static constexpr OpKind kSqr = OpKind::kFpSqr;
  static constexpr OpKind kAdd = OpKind::kFpAdd;
  static constexpr OpKind kSub = OpKind::kFpSub;
  static constexpr OpKind kNeg = OpKind::kFpNeg;
  static constexpr OpKind kInv = OpKind::kFpInv;
};

// Scalar field: the prime order q of G1, G2 and GT, 255 bits.
struct FqParams {
  static constexpr FieldTag kTag = FieldTag::kScalar;
  static constexpr std::size_t kLimbs = 4;
  static constexpr std::size_t kBytes = 32;
  static constexpr unsigned kDatapathBits = 256;
  static constexpr UInt<4> kModulus = UInt<4>::from_hex(
      "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
  static constexpr OpKind kMul = OpKind::kFqMul;
  static constexpr OpKind kSqr = OpKind::kFqSqr;
  static constexpr OpKind kAdd = OpKind::kFqAdd;
  static constexpr OpKind kSub = OpKind::kFqSub;
  static constexpr OpKind kNeg = OpKind::kFqNeg;
  static constexpr OpKind kInv = OpKind::kFqInv;
};

// |u| for the curve parameter u = -0xd201000000010000. Does not fit a signed
// 64-bit integer, so the sign is carried separately.
inline constexpr std::uint64_t kBlsX = 0xd201000000010000ull;
inline constexpr bool kBlsXIsNegative = true;

namespace detail {

constexpr std::uint64_t neg_inverse_mod_2_64(std::uint64_t n) {
  std::uint64_t inv = 1;
  for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
  return std::uint64_t{0} - inv;
}

template <class P>
struct MontConstants {
  static constexpr std::size_t L = P::kLimbs;
  static constexpr UInt<L> kR = pow2_mod(64 * L, P::kModulus);
  static constexpr UInt<L> kR2 = pow2_mod(128 * L, P::kModulus);
  static constexpr std::uint64_t kN0 =
      neg_inverse_mod_2_64(P::kModulus.limb[0]);
  static_assert(P::kModulus.limb[0] * (std::uint64_t{0} - kN0) == 1);
};

}  // namespace detail

// An element of Fp or Fq in Montgomery form. Values are always canonical.
// The two fields are distinct types, so mixing them does not compile.
template <class P>
class FieldElement {
  using Mont = detail::MontConstants<P>;

 public:
  using Params = P;
  static constexpr FieldTag kTag = P::kTag;
  static constexpr std::size_t kLimbs = P::kLimbs;
  static constexpr std::size_t kBytes = P::kBytes;
  using Limbs = std::array<std::uint64_t, kLimbs>;
  using Int = UInt<kLimbs>;
  using Bytes = std::array<std::uint8_t, kBytes>;

  constexpr FieldElement() = default;

  static constexpr FieldElement zero() { return FieldElement(); }
  static constexpr FieldElement one() { return from_mont_limbs(Mont::kR.limb); }
  static constexpr const Int& modulus() { return P::kModulus; }

  // to_mont. Throws UsageError unless n < modulus.
  static constexpr FieldElement from_uint(const Int& n) {
    if (n >= P::kModulus) throw UsageError("integer not below the modulus");
    return from_mont_limbs(raw_mul(n.limb, Mont::kR2.limb));
  }
  static constexpr FieldElement from_u64(std::uint64_t v) {
    return from_uint(Int(v));
  }
  static constexpr FieldElement from_hex(std::string_view hex) {
    return from_uint(Int::from_hex(hex));
  }

  // Big-endian canonical encoding, exactly kBytes long.
  static FieldElement from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBytes) {
      throw DecodeError(DecodeErrorKind::kMalformed,
                        "field element must be " + std::to_string(kBytes) +
                            " bytes");
    }
    const Int n = Int::from_bytes_be(bytes);
    if (n >= P::kModulus) {
      throw DecodeError(DecodeErrorKind::kMalformed,
                        "non-canonical field element");
    }
    return from_uint(n);
  }

  // Reinterprets raw limbs as a Montgomery residue. No range check.
  static constexpr FieldElement from_mont_limbs(const Limbs& limbs) {
    FieldElement e;
    e.limbs_ = limbs;
    return e;
  }

  // from_mont.
  constexpr Int to_uint() const {
    Limbs unit{};
    unit[0] = 1;
    Int out;
    out.limb = raw_mul(limbs_, unit);
    return out;
  }
  Bytes to_bytes() const { return to_uint().template to_bytes_be<kBytes>(); }
  std::string to_hex() const { return to_uint().to_hex_padded(2 * kBytes); }

  constexpr const Limbs& mont_limbs() const { return limbs_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    current_engine().record(P::kAdd);
    return add_raw(a, b);
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    current_engine().record(P::kSub);
    return sub_raw(a, b);
  }
  friend FieldElement operator-(const FieldElement& a) {
    current_engine().record(P::kNeg);
    return sub_raw(FieldElement(), a);
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    current_engine().record(P::kMul);
    return from_mont_limbs(raw_mul(a.limbs_, b.limbs_));
  }
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  FieldElement square() const {
    current_engine().record(P::kSqr);
    return from_mont_limbs(raw_mul(limbs_, limbs_));
  }

  FieldElement dbl() const { return *this + *this; }

  // k*x by k-1 modular additions, the way an adder-only datapath does it.
  template <unsigned K>
  FieldElement times() const {
    static_assert(K >= 1);
    FieldElement r = *this;
    for (unsigned i = 1; i < K; ++i) r = r + *this;
    return r;
  }

  // Fermat inversion. Throws DomainError on zero.
  FieldElement inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return inverse_or_zero();
  }

  // Same chain, maps 0 to 0. The exponent is public, so branching on its
  // bits leaks nothing about the input.
  FieldElement inverse_or_zero() const {
    static constexpr Int kExp = P::kModulus - Int(2);
    current_engine().record(P::kInv);
    Limbs r = limbs_;
    for (std::size_t i = kExp.bit_length() - 1; i-- > 0;) {
      r = raw_mul(r, r);
      if (kExp.bit(i)) r = raw_mul(r, limbs_);
    }
    return from_mont_limbs(r);
  }

  // x^e for a public exponent, counted as squarings and multiplications.
  template <std::size_t N>
  FieldElement pow(const UInt<N>& e) const {
    const std::size_t bits = e.bit_length();
    if (bits == 0) return one();
    FieldElement r = *this;
    for (std::size_t i = bits - 1; i-- > 0;) {
      r = r.square();
      if (e.bit(i)) r = r * *this;
    }
    return r;
  }

  // Square root for p = 3 mod 4: x^((p+1)/4), checked.
  std::optional<FieldElement> sqrt() const
    requires(P::kModulus.limb[0] % 4 == 3)
  {
    static constexpr Int kExp = (P::kModulus + Int(1)) >> 2;
    const FieldElement c = pow(kExp);
    if (c.square() == *this) return c;
    return std::nullopt;
  }

  // Euler's criterion; zero counts as a square.
  bool is_square() const {
    static constexpr Int kExp = (P::kModulus - Int(1)) >> 1;
    const FieldElement l = pow(kExp);
    return l == one() || l.is_zero();
  }

  constexpr std::uint64_t zero_mask() const {
    std::uint64_t acc = 0;
    for (auto l : limbs_) acc |= l;
    // All ones iff acc == 0, without a branch.
    return ((acc | (std::uint64_t{0} - acc)) >> 63) - 1;
  }
  constexpr bool is_zero() const { return zero_mask() != 0; }
  bool is_one() const { return *this == one(); }

  // Parity of the canonical integer.
  bool sgn0() const { return to_uint().is_odd(); }

  // True if the canonical value exceeds (modulus - 1) / 2.
  bool lexicographically_largest() const {
    static constexpr Int kHalf = (P::kModulus - Int(1)) >> 1;
    return to_uint() > kHalf;
  }

  // mask all ones selects a, mask zero selects b.
  static constexpr FieldElement select(std::uint64_t mask, const FieldElement& a,
                                       const FieldElement& b) {
    FieldElement r;
    for (std::size_t i = 0; i < kLimbs; ++i) {
      r.limbs_[i] = (a.limbs_[i] & mask) | (b.limbs_[i] & ~mask);
    }
    return r;
  }

  static constexpr std::uint64_t eq_mask(const FieldElement& a,
                                         const FieldElement& b) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < kLimbs; ++i) acc |= a.limbs_[i] ^ b.limbs_[i];
    return ((acc | (std::uint64_t{0} - acc)) >> 63) - 1;
  }

  friend constexpr bool operator==(const FieldElement& a,
                                   const FieldElement& b) {
    return eq_mask(a, b) != 0;
  }

  // Montgomery product on raw limbs: counts the CIOS call and its word
  // operations, nothing at the field level.
  static constexpr Limbs raw_mul(const Limbs& a, const Limbs& b) {
    detail::WordTally tally;
    if (std::is_constant_evaluated()) {
      return detail::cios<std::uint64_t, kLimbs>(a, b, P::kModulus.limb,
                                                 Mont::kN0, tally);
    }
    Engine& e = current_engine();
    const std::uint64_t n0 = e.fault_injection() ? (Mont::kN0 ^ 1) : Mont::kN0;
    const Limbs r = detail::cios_dispatch<kLimbs>(a, b, P::kModulus.limb, n0,
                                                  e.word_bits(), tally);
    e.record_cios(tally.mul, tally.add);
    return r;
  }

 private:
  // Both moduli leave a spare top bit, so a + b never carries out.
  static constexpr FieldElement add_raw(const FieldElement& a,
                                        const FieldElement& b) {
    Int s, t;
    s.limb = a.limbs_;
    t.limb = b.limbs_;
    add_in_place(s, t);
    Int d = s;
    const std::uint64_t borrow = sub_in_place(d, P::kModulus);
    const std::uint64_t keep_s = std::uint64_t{0} - borrow;
    FieldElement r;
    for (std::size_t i = 0; i < kLimbs; ++i) {
      r.limbs_[i] = (s.limb[i] & keep_s) | (d.limb[i] & ~keep_s);
    }
    return r;
  }

  static constexpr FieldElement sub_raw(const FieldElement& a,
                                        const FieldElement& b) {
    Int d, t;
    d.limb = a.limbs_;
    t.limb = b.limbs_;
    const std::uint64_t borrow = sub_in_place(d, t);
    const std::uint64_t mask = std::uint64_t{0} - borrow;
    Int fix;
    for (std::size_t i = 0; i < kLimbs; ++i) {
      fix.limb[i] = P::kModulus.limb[i] & mask;
    }
    add_in_place(d, fix);
    FieldElement r;
    r.limbs_ = d.limb;
    return r;
  }

  static_assert(P::kModulus.bit_length() < 64 * P::kLimbs);

  Limbs limbs_{};
};

using Fp = FieldElement<FpParams>;
using Fq = FieldElement<FqParams>;

// Named constants of the system at a given CIOS word size.
struct SystemParams {
  UInt<6> p;
  UInt<4> q;
  std::uint64_t u_abs = kBlsX;
  bool u_negative = kBlsXIsNegative;
  unsigned word_bits = 64;
  unsigned words_p = 0;  // s for Fp
  unsigned words_q = 0;  // s for Fq
  UInt<6> mont_R_p, mont_R2_p, mont_Rinv_p;
  UInt<4> mont_R_q, mont_R2_q;
  std::uint64_t p_prime_w = 0;  // -p^-1 mod 2^w
  std::uint64_t q_prime_w = 0;
  UInt<4> u_sq_mod_q;
};

inline SystemParams system_params(unsigned word_bits = 64) {
  if (!is_executable_word_size(word_bits)) {
    throw UsageError("word size must be 16, 32 or 64");
  }
  Uncounted quiet;
  SystemParams sp;
  sp.p = FpParams::kModulus;
  sp.q = FqParams::kModulus;
  sp.word_bits = word_bits;
  sp.words_p = FpParams::kDatapathBits / word_bits;
  sp.words_q = FqParams::kDatapathBits / word_bits;
  sp.mont_R_p = detail::MontConstants<FpParams>::kR;
  sp.mont_R2_p = detail::MontConstants<FpParams>::kR2;
  Fp::Limbs unit{};
  unit[0] = 1;
  sp.mont_Rinv_p = Fp::from_mont_limbs(unit).to_uint();
  sp.mont_R_q = detail::MontConstants<FqParams>::kR;
  sp.mont_R2_q = detail::MontConstants<FqParams>::kR2;
  const std::uint64_t wmask =
      word_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << word_bits) - 1;
  sp.p_prime_w = detail::MontConstants<FpParams>::kN0 & wmask;
  sp.q_prime_w = detail::MontConstants<FqParams>::kN0 & wmask;
  sp.u_sq_mod_q = resize<4>(mul_wide(UInt<1>(kBlsX), UInt<1>(kBlsX)));
  return sp;
}

}  // namespace ctbls
