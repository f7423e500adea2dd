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
#include <utility>

#include "ctbls/bigint.hpp"
#include "ctbls/errors.hpp"
#include "ctbls/field.hpp"
#include "ctbls/scalar.hpp"

namespace ctbls {

// Jubjub: -x^2 + y^2 = 1 + d x^2 y^2 over Fq, d = -10240/10241. The prime
// subgroup has order kJubjubOrder (252 bits) and cofactor 8.
struct Jubjub {
  static constexpr Fq kD = Fq::from_hex(
      "2a9318e74bfa2b48f5fd9207e6bd7fd4292d7f6d37579d2601065fd6d6343eb1");
  static constexpr UInt<4> kOrder = UInt<4>::from_hex(
      "0e7db4ea6533afa906673b0101343b00a6682093ccc81082d0970e5ed6f72cb7");
  static constexpr std::uint64_t kCofactor = 8;
  static constexpr std::size_t kScalarBits = 252;
  // 8 * (x, 11), a generator of the prime-order subgroup.
  static constexpr Fq kGeneratorX = Fq::from_hex(
      "3ea5c4673a121ca35ed37ee3b172f5ee04315c657fbe375f512dfea318d56fe5");
  static constexpr Fq kGeneratorY = Fq::from_hex(
      "57137b83ea6edb4f78f7d30d3f616cb3b9aa6e8e40808413c10cea38d50c55cb");
};

// Projective twisted Edwards point (X : Y : Z), x = X/Z, y = Y/Z. With
// a = -1 a square and d a non-square in Fq the unified formulas below are
// complete.
class JubjubPoint {
 public:
  // Neutral element (0 : 1 : 1).
  JubjubPoint() : x_(), y_(Fq::one()), z_(Fq::one()) {}

  static JubjubPoint identity() { return JubjubPoint(); }

  static const JubjubPoint& generator() {
    static const JubjubPoint g =
        from_affine(Jubjub::kGeneratorX, Jubjub::kGeneratorY);
    return g;
  }

  static JubjubPoint from_affine(const Fq& x, const Fq& y) {
    JubjubPoint p(x, y, Fq::one());
    Uncounted quiet;
    if (!p.is_on_curve()) throw DomainError("Jubjub point not on curve");
    return p;
  }

  static JubjubPoint from_projective_unchecked(const Fq& x, const Fq& y,
                                               const Fq& z) {
    return JubjubPoint(x, y, z);
  }

  const Fq& x() const { return x_; }
  const Fq& y() const { return y_; }
  const Fq& z() const { return z_; }

  // (-X^2 + Y^2) Z^2 = Z^4 + d X^2 Y^2, Z != 0.
  bool is_on_curve() const {
    if (z_.is_zero()) return false;
    const Fq x2 = x_.square(), y2 = y_.square(), z2 = z_.square();
    return (y2 - x2) * z2 == z2.square() + Jubjub::kD * x2 * y2;
  }

  bool is_identity() const { return x_.is_zero() && y_ == z_; }

  // Variable-time r_J * P = O.
  bool in_subgroup() const {
    Uncounted quiet;
    return mul_vartime(Jubjub::kOrder).is_identity();
  }

  // add-2008-bbjlp with a = -1: 11 M + 1 S, the d product included.
  friend JubjubPoint operator+(const JubjubPoint& p, const JubjubPoint& q) {
    const Fq a = p.z_ * q.z_;
    const Fq b = a.square();
    const Fq c = p.x_ * q.x_;
    const Fq d = p.y_ * q.y_;
    const Fq e = Jubjub::kD * c * d;
    const Fq f = b - e;
    const Fq g = b + e;
    const Fq x3 = a * f * ((p.x_ + p.y_) * (q.x_ + q.y_) - c - d);
    const Fq y3 = a * g * (d + c);
    const Fq z3 = f * g;
    return JubjubPoint(x3, y3, z3);
  }

  // dbl-2008-bbjlp with a = -1: 3 M + 4 S.
  JubjubPoint dbl() const {
    const Fq b = (x_ + y_).square();
    const Fq c = x_.square();
    const Fq d = y_.square();
    const Fq e = -c;
    const Fq f = e + d;
    const Fq h = z_.square();
    const Fq j = f - h.dbl();
    const Fq x3 = (b - c - d) * j;
    const Fq y3 = f * (e - d);
    const Fq z3 = f * j;
    return JubjubPoint(x3, y3, z3);
  }

  friend JubjubPoint operator-(const JubjubPoint& p) {
    return JubjubPoint(-p.x_, p.y_, p.z_);
  }

  // Z = 1 form: one inversion, two products.
  JubjubPoint normalize() const {
    const Fq zinv = z_.inverse();
    return JubjubPoint(x_ * zinv, y_ * zinv, Fq::one());
  }

  std::pair<Fq, Fq> to_affine() const {
    const JubjubPoint n = normalize();
    return {n.x_, n.y_};
  }

  template <std::size_t N>
  JubjubPoint mul_vartime(const UInt<N>& k) const {
    JubjubPoint r;
    for (std::size_t i = k.bit_length(); i-- > 0;) {
      r = r.dbl();
      if (k.bit(i)) r = r + *this;
    }
    return r;
  }

  static JubjubPoint select(std::uint64_t mask, const JubjubPoint& a,
                            const JubjubPoint& b) {
    return JubjubPoint(Fq::select(mask, a.x_, b.x_), Fq::select(mask, a.y_, b.y_),
                       Fq::select(mask, a.z_, b.z_));
  }

  friend bool operator==(const JubjubPoint& p, const JubjubPoint& q) {
    Uncounted quiet;
    return p.x_ * q.z_ == q.x_ * p.z_ && p.y_ * q.z_ == q.y_ * p.z_;
  }

 private:
  JubjubPoint(const Fq& x, const Fq& y, const Fq& z) : x_(x), y_(y), z_(z) {}

  Fq x_, y_, z_;
};

// k*P over a fixed 252 iterations of double and unified add with masked
// select, then normalized. Any k below 2^252 is accepted, which includes
// the subgroup order itself.
inline JubjubPoint jubjub_ecsm(const UInt<4>& k, const JubjubPoint& p) {
  {
    Uncounted quiet;
    if (!p.is_on_curve()) throw DomainError("Jubjub ECSM input not on curve");
  }
  if (k.bit_length() > Jubjub::kScalarBits) {
    throw UsageError("Jubjub scalar wider than 252 bits");
  }
  JubjubPoint r;
  for (std::size_t i = Jubjub::kScalarBits; i-- > 0;) {
    r = r.dbl();
    const JubjubPoint t = r + p;
    r = JubjubPoint::select(bit_mask(k, i), t, r);
  }
  return r.normalize();
}

}  // namespace ctbls
