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
#include <optional>

#include "ctbls/field.hpp"

namespace ctbls {

// Fp2 = Fp[a] / (a^2 + 1). Every operation reports one Fp2-level tally in
// addition to the Fp operations it performs.
class Fp2 {
 public:
  Fp c0, c1;

  constexpr Fp2() = default;
  constexpr Fp2(const Fp& a0, const Fp& a1) : c0(a0), c1(a1) {}
  constexpr explicit Fp2(const Fp& a0) : c0(a0) {}

  static constexpr Fp2 zero() { return Fp2(); }
  static constexpr Fp2 one() { return Fp2(Fp::one()); }
  // The quadratic and sextic non-residue xi = 1 + a.
  static constexpr Fp2 xi() { return Fp2(Fp::one(), Fp::one()); }

  friend Fp2 operator+(const Fp2& a, const Fp2& b) {
    current_engine().record_ext(ExtOp::kAdd);
    return Fp2(a.c0 + b.c0, a.c1 + b.c1);
  }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) {
    current_engine().record_ext(ExtOp::kAdd);
    return Fp2(a.c0 - b.c0, a.c1 - b.c1);
  }
  friend Fp2 operator-(const Fp2& a) {
    current_engine().record_ext(ExtOp::kAdd);
    return Fp2(-a.c0, -a.c1);
  }

  // Karatsuba, three base-field products.
  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    current_engine().record_ext(ExtOp::kMul);
    const Fp v0 = a.c0 * b.c0;
    const Fp v1 = a.c1 * b.c1;
    const Fp s = (a.c0 + a.c1) * (b.c0 + b.c1);
    return Fp2(v0 - v1, s - v0 - v1);
  }

  Fp2& operator+=(const Fp2& b) { return *this = *this + b; }
  Fp2& operator-=(const Fp2& b) { return *this = *this - b; }
  Fp2& operator*=(const Fp2& b) { return *this = *this * b; }

  // Complex method: (c0 + c1)(c0 - c1) + 2 c0 c1 a.
  Fp2 square() const {
    current_engine().record_ext(ExtOp::kSqr);
    const Fp t = c0 * c1;
    return Fp2((c0 + c1) * (c0 - c1), t + t);
  }

  Fp2 dbl() const { return *this + *this; }

  template <unsigned K>
  Fp2 times() const {
    static_assert(K >= 1);
    Fp2 r = *this;
    for (unsigned i = 1; i < K; ++i) r = r + *this;
    return r;
  }

  // Norm descent: 2 squarings, 2 products, an addition, a negation and one
  // base-field inversion.
  Fp2 inverse_or_zero() const {
    current_engine().record_ext(ExtOp::kInv);
    const Fp t = (c0.square() + c1.square()).inverse_or_zero();
    return Fp2(c0 * t, -(c1 * t));
  }
  Fp2 inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Fp2");
    return inverse_or_zero();
  }

  // Multiplication by xi = 1 + a, two additions.
  Fp2 mul_by_nonresidue() const { return Fp2(c0 - c1, c0 + c1); }

  Fp2 mul_by_fp(const Fp& s) const { return Fp2(c0 * s, c1 * s); }

  // x^p.
  Fp2 conjugate() const { return Fp2(c0, -c1); }

  template <std::size_t N>
  Fp2 pow(const UInt<N>& e) const {
    const std::size_t bits = e.bit_length();
    if (bits == 0) return one();
    Fp2 r = *this;
    for (std::size_t i = bits - 1; i-- > 0;) {
      r = r.square();
      if (e.bit(i)) r = r * *this;
    }
    return r;
  }

  // Square root for p = 3 mod 4 (the Adj and Rodriguez-Henriquez complex method).
  std::optional<Fp2> sqrt() const {
    static constexpr UInt<6> kP34 = (FpParams::kModulus - UInt<6>(3)) >> 2;
    static constexpr UInt<6> kP12 = (FpParams::kModulus - UInt<6>(1)) >> 1;
    if (is_zero()) return zero();
    const Fp2 a1 = pow(kP34);
    const Fp2 alpha = a1.square() * *this;
    const Fp2 a0 = alpha.conjugate() * alpha;
    const Fp2 minus_one = -one();
    if (a0 == minus_one) return std::nullopt;
    const Fp2 x0 = a1 * *this;
    Fp2 x;
    if (alpha == minus_one) {
      x = Fp2(-x0.c1, x0.c0);
    } else {
      x = (alpha + one()).pow(kP12) * x0;
    }
    if (x.square() != *this) return std::nullopt;
    return x;
  }

  constexpr std::uint64_t zero_mask() const {
    return c0.zero_mask() & c1.zero_mask();
  }
  constexpr bool is_zero() const { return zero_mask() != 0; }

  // Ordering used by point compression: compare c1 first, then c0.
  bool lexicographically_largest() const {
    return c1.lexicographically_largest() ||
           (c1.is_zero() && c0.lexicographically_largest());
  }

  static constexpr Fp2 select(std::uint64_t mask, const Fp2& a, const Fp2& b) {
    return Fp2(Fp::select(mask, a.c0, b.c0), Fp::select(mask, a.c1, b.c1));
  }
  static constexpr std::uint64_t eq_mask(const Fp2& a, const Fp2& b) {
    return Fp::eq_mask(a.c0, b.c0) & Fp::eq_mask(a.c1, b.c1);
  }
  friend constexpr bool operator==(const Fp2& a, const Fp2& b) {
    return eq_mask(a, b) != 0;
  }
};

}  // namespace ctbls
