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

#include "ctbls/fp6.hpp"

namespace ctbls {

class Fp12;

namespace detail {

// xi^(i (p^k - 1) / 6) for k = 1, 2, 3 and i = 0..5. Computed once from
// xi = 1 + a rather than transcribed.
struct FrobeniusConstants {
  std::array<std::array<Fp2, 6>, 4> gamma{};
};

template <std::size_t N>
Fp2 xi_power_for(const UInt<N>& p_to_k) {
  const auto [e, r] = divmod(p_to_k - UInt<N>(1), UInt<1>(6));
  if (!r.is_zero()) throw DomainError("p^k - 1 not divisible by 6");
  return Fp2::xi().pow(e);
}

inline const FrobeniusConstants& frobenius_constants() {
  static const FrobeniusConstants table = [] {
    Uncounted quiet;
    FrobeniusConstants t;
    const UInt<6> p1 = FpParams::kModulus;
    const UInt<12> p2 = mul_wide(p1, p1);
    const UInt<18> p3 = mul_wide(p2, p1);
    const std::array<Fp2, 4> base = {Fp2::one(), xi_power_for(p1),
                                      xi_power_for(p2), xi_power_for(p3)};
    for (int k = 1; k <= 3; ++k) {
      t.gamma[k][0] = Fp2::one();
      for (int i = 1; i < 6; ++i) t.gamma[k][i] = t.gamma[k][i - 1] * base[k];
    }
    return t;
  }();
  return table;
}

}  // namespace detail

// Fp12 = Fp6[w] / (w^2 - v). Equivalently Fp2[w] / (w^6 - xi), which is the
// view used by the Frobenius map and by serialization order checks.
class Fp12 {
 public:
  static constexpr std::size_t kBytes = 12 * Fp::kBytes;
  using Bytes = std::array<std::uint8_t, kBytes>;

  Fp6 c0, c1;

  constexpr Fp12() = default;
  constexpr Fp12(const Fp6& a0, const Fp6& a1) : c0(a0), c1(a1) {}
  constexpr explicit Fp12(const Fp6& a0) : c0(a0) {}

  static constexpr Fp12 zero() { return Fp12(); }
  static constexpr Fp12 one() { return Fp12(Fp6::one()); }

  // Coefficients of 1, w, ..., w^5 over Fp2.
  std::array<Fp2, 6> w_coefficients() const {
    return {c0.c0, c1.c0, c0.c1, c1.c1, c0.c2, c1.c2};
  }
  static Fp12 from_w_coefficients(const std::array<Fp2, 6>& a) {
    return Fp12(Fp6(a[0], a[2], a[4]), Fp6(a[1], a[3], a[5]));
  }

  friend Fp12 operator+(const Fp12& a, const Fp12& b) {
    return Fp12(a.c0 + b.c0, a.c1 + b.c1);
  }
  friend Fp12 operator-(const Fp12& a, const Fp12& b) {
    return Fp12(a.c0 - b.c0, a.c1 - b.c1);
  }
  friend Fp12 operator-(const Fp12& a) { return Fp12(-a.c0, -a.c1); }

  // Karatsuba over Fp6: 18 Fp2 products.
  friend Fp12 operator*(const Fp12& a, const Fp12& b) {
    const Fp6 aa = a.c0 * b.c0;
    const Fp6 bb = a.c1 * b.c1;
    const Fp6 c1 = (a.c0 + a.c1) * (b.c0 + b.c1) - aa - bb;
    return Fp12(aa + bb.mul_by_nonresidue(), c1);
  }
  Fp12& operator*=(const Fp12& b) { return *this = *this * b; }

  // Complex squaring: two Fp6 products.
  Fp12 square() const {
    const Fp6 ab = c0 * c1;
    const Fp6 t = (c0 + c1) * (c0 + c1.mul_by_nonresidue());
    return Fp12(t - ab - ab.mul_by_nonresidue(), ab + ab);
  }

  // Product with a line b0 + b1 w + b4 w^4 (w-basis indices 0, 1, 4 map to
  // c0.c0, c0.c1 and c1.c1): 13 Fp2 products.
  Fp12 mul_by_014(const Fp2& b0, const Fp2& b1, const Fp2& b4) const {
    const Fp6 aa = c0.mul_by_01(b0, b1);
    const Fp6 bb = c1.mul_by_1(b4);
    const Fp2 o = b1 + b4;
    const Fp6 t = (c1 + c0).mul_by_01(b0, o) - aa - bb;
    return Fp12(bb.mul_by_nonresidue() + aa, t);
  }

  // x^(p^6), which is the inverse on the cyclotomic subgroup.
  Fp12 conjugate() const { return Fp12(c0, -c1); }

  Fp12 inverse_or_zero() const {
    const Fp6 t = (c0.square() - c1.square().mul_by_nonresidue()).inverse_or_zero();
    return Fp12(c0 * t, -(c1 * t));
  }
  Fp12 inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Fp12");
    return inverse_or_zero();
  }

  // x^(p^power) for power in {1, 2, 3, 6}.
  Fp12 frobenius(int power) const {
    if (power == 6) return conjugate();
    if (power < 1 || power > 3) {
      throw UsageError("frobenius power must be 1, 2, 3 or 6");
    }
    const auto& g = detail::frobenius_constants().gamma[power];
    auto a = w_coefficients();
    for (std::size_t i = 0; i < 6; ++i) {
      if (power % 2 == 1) a[i] = a[i].conjugate();
      if (i == 0) continue;
      // Constants of even powers lie in Fp; multiply by the Fp part only.
      a[i] = g[i].c1.is_zero() ? a[i].mul_by_fp(g[i].c0) : a[i] * g[i];
    }
    return from_w_coefficients(a);
  }

  // Granger-Scott squaring, valid for elements of the cyclotomic subgroup
  // (anything after the easy part of the final exponentiation): 9 Fp2
  // squarings instead of 12 Fp2 products.
  Fp12 cyclotomic_square() const {
    Fp2 z0 = c0.c0, z4 = c0.c1, z3 = c0.c2;
    Fp2 z2 = c1.c0, z1 = c1.c1, z5 = c1.c2;
    auto [t0, t1] = fp4_square(z0, z1);
    z0 = t0 - z0;
    z0 = z0 + z0 + t0;
    z1 = t1 + z1;
    z1 = z1 + z1 + t1;
    auto [u0, u1] = fp4_square(z2, z3);
    auto [t2, t3] = fp4_square(z4, z5);
    z4 = u0 - z4;
    z4 = z4 + z4 + u0;
    z5 = u1 + z5;
    z5 = z5 + z5 + u1;
    const Fp2 s = t3.mul_by_nonresidue();
    z2 = s + z2;
    z2 = z2 + z2 + s;
    z3 = t2 - z3;
    z3 = z3 + z3 + t2;
    return Fp12(Fp6(z0, z4, z3), Fp6(z2, z1, z5));
  }

  // Generic exponentiation by a public exponent.
  template <std::size_t N>
  Fp12 pow(const UInt<N>& e) const {
    const std::size_t bits = e.bit_length();
    if (bits == 0) return one();
    Fp12 r = *this;
    for (std::size_t i = bits - 1; i-- > 0;) {
      r = r.square();
      if (e.bit(i)) r = r * *this;
    }
    return r;
  }

  // Twelve 48-byte big-endian Fp encodings, c0.c0.c0 first.
  Bytes to_bytes() const {
    Bytes out{};
    std::size_t off = 0;
    for (const Fp6* h : {&c0, &c1}) {
      for (const Fp2* t : {&h->c0, &h->c1, &h->c2}) {
        for (const Fp* f : {&t->c0, &t->c1}) {
          const auto b = f->to_bytes();
          std::copy(b.begin(), b.end(), out.begin() + off);
          off += Fp::kBytes;
        }
      }
    }
    return out;
  }

  static Fp12 from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBytes) {
      throw DecodeError(DecodeErrorKind::kMalformed, "Fp12 must be 576 bytes");
    }
    Fp12 r;
    std::size_t off = 0;
    for (Fp6* h : {&r.c0, &r.c1}) {
      for (Fp2* t : {&h->c0, &h->c1, &h->c2}) {
        for (Fp* f : {&t->c0, &t->c1}) {
          *f = Fp::from_bytes(bytes.subspan(off, Fp::kBytes));
          off += Fp::kBytes;
        }
      }
    }
    return r;
  }

  constexpr std::uint64_t zero_mask() const {
    return c0.zero_mask() & c1.zero_mask();
  }
  constexpr bool is_zero() const { return zero_mask() != 0; }
  bool is_one() const { return *this == one(); }

  static constexpr Fp12 select(std::uint64_t mask, const Fp12& a,
                               const Fp12& b) {
    return Fp12(Fp6::select(mask, a.c0, b.c0), Fp6::select(mask, a.c1, b.c1));
  }
  friend constexpr bool operator==(const Fp12& a, const Fp12& b) {
    return (Fp6::eq_mask(a.c0, b.c0) & Fp6::eq_mask(a.c1, b.c1)) != 0;
  }

 private:
  // (a + b y)^2 in Fp4 = Fp2[y] / (y^2 - xi).
  static std::pair<Fp2, Fp2> fp4_square(const Fp2& a, const Fp2& b) {
    const Fp2 t0 = a.square();
    const Fp2 t1 = b.square();
    const Fp2 c0 = t1.mul_by_nonresidue() + t0;
    const Fp2 c1 = (a + b).square() - t0 - t1;
    return {c0, c1};
  }
};

}  // namespace ctbls
