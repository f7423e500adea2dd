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

#include "ctbls/fp2.hpp"

namespace ctbls {

// Fp6 = Fp2[v] / (v^3 - xi).
class Fp6 {
 public:
  Fp2 c0, c1, c2;

  constexpr Fp6() = default;
  constexpr Fp6(const Fp2& a0, const Fp2& a1, const Fp2& a2)
      : c0(a0), c1(a1), c2(a2) {}
  constexpr explicit Fp6(const Fp2& a0) : c0(a0) {}

  static constexpr Fp6 zero() { return Fp6(); }
  static constexpr Fp6 one() { return Fp6(Fp2::one()); }

  friend Fp6 operator+(const Fp6& a, const Fp6& b) {
    return Fp6(a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2);
  }
  friend Fp6 operator-(const Fp6& a, const Fp6& b) {
    return Fp6(a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2);
  }
  friend Fp6 operator-(const Fp6& a) { return Fp6(-a.c0, -a.c1, -a.c2); }

  // Karatsuba over three coefficients: six Fp2 products.
  friend Fp6 operator*(const Fp6& a, const Fp6& b) {
    const Fp2 v0 = a.c0 * b.c0;
    const Fp2 v1 = a.c1 * b.c1;
    const Fp2 v2 = a.c2 * b.c2;
    const Fp2 t0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - v1 - v2).mul_by_nonresidue();
    const Fp2 t1 = (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1;
    const Fp2 t2 = (a.c0 + a.c2) * (b.c0 + b.c2) - v0 + v1 - v2;
    return Fp6(v0 + t0, t1 + v2.mul_by_nonresidue(), t2);
  }
  Fp6& operator*=(const Fp6& b) { return *this = *this * b; }

  // Chung-Hasan SQR2: three squarings, two products.
  Fp6 square() const {
    const Fp2 s0 = c0.square();
    const Fp2 ab = c0 * c1;
    const Fp2 s1 = ab + ab;
    const Fp2 s2 = (c0 - c1 + c2).square();
    const Fp2 bc = c1 * c2;
    const Fp2 s3 = bc + bc;
    const Fp2 s4 = c2.square();
    return Fp6(s0 + s3.mul_by_nonresidue(), s1 + s4.mul_by_nonresidue(),
               s1 + s2 + s3 - s0 - s4);
  }

  // Product with b0 + b1 v: five Fp2 products.
  Fp6 mul_by_01(const Fp2& b0, const Fp2& b1) const {
    const Fp2 aa = c0 * b0;
    const Fp2 bb = c1 * b1;
    const Fp2 t1 = (c2 * b1).mul_by_nonresidue() + aa;
    const Fp2 t2 = (b0 + b1) * (c0 + c1) - aa - bb;
    const Fp2 t3 = c2 * b0 + bb;
    return Fp6(t1, t2, t3);
  }

  // Product with b1 v: three Fp2 products.
  Fp6 mul_by_1(const Fp2& b1) const {
    return Fp6((c2 * b1).mul_by_nonresidue(), c0 * b1, c1 * b1);
  }

  // Multiplication by v.
  Fp6 mul_by_nonresidue() const { return Fp6(c2.mul_by_nonresidue(), c0, c1); }

  Fp6 inverse_or_zero() const {
    const Fp2 t0 = c0.square() - (c1 * c2).mul_by_nonresidue();
    const Fp2 t1 = c2.square().mul_by_nonresidue() - c0 * c1;
    const Fp2 t2 = c1.square() - c0 * c2;
    const Fp2 det = c0 * t0 + (c2 * t1 + c1 * t2).mul_by_nonresidue();
    const Fp2 inv = det.inverse_or_zero();
    return Fp6(t0 * inv, t1 * inv, t2 * inv);
  }
  Fp6 inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Fp6");
    return inverse_or_zero();
  }

  constexpr std::uint64_t zero_mask() const {
    return c0.zero_mask() & c1.zero_mask() & c2.zero_mask();
  }
  constexpr bool is_zero() const { return zero_mask() != 0; }

  static constexpr Fp6 select(std::uint64_t mask, const Fp6& a, const Fp6& b) {
    return Fp6(Fp2::select(mask, a.c0, b.c0), Fp2::select(mask, a.c1, b.c1),
               Fp2::select(mask, a.c2, b.c2));
  }
  static constexpr std::uint64_t eq_mask(const Fp6& a, const Fp6& b) {
    return Fp2::eq_mask(a.c0, b.c0) & Fp2::eq_mask(a.c1, b.c1) &
           Fp2::eq_mask(a.c2, b.c2);
  }
  friend constexpr bool operator==(const Fp6& a, const Fp6& b) {
    return eq_mask(a, b) != 0;
  }
};

}  // namespace ctbls
