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

#include "ctbls/errors.hpp"
#include "ctbls/field.hpp"
#include "ctbls/fp2.hpp"
#include "ctbls/scalar.hpp"

namespace ctbls {

// E(Fp): y^2 = x^3 + 4.
struct G1Curve {
  using Field = Fp;
  static constexpr const char* kName = "G1";
  static constexpr Fp kB = Fp::from_u64(4);
  static const Fp& b() { return kB; }
  // 3b = 12, by eleven additions.
  static Fp mul_by_3b(const Fp& x) { return x.times<12>(); }
  static constexpr Fp kGeneratorX = Fp::from_hex(
        "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55"
        "e83ff97a1aeffb3af00adb22c6bb");
  static constexpr Fp kGeneratorY = Fp::from_hex(
        "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03c"
        "c744a2888ae40caa232946c5e7e1");
};

// E'(Fp2): y^2 = x^3 + 4(1 + a), the sextic twist carrying G2.
struct G2Curve {
  using Field = Fp2;
  static constexpr const char* kName = "G2";
  static constexpr Fp2 kB = Fp2(Fp::from_u64(4), Fp::from_u64(4));
  static const Fp2& b() { return kB; }
  // 3b = 12 xi: one multiplication by xi, then eleven additions.
  static Fp2 mul_by_3b(const Fp2& x) { return x.mul_by_nonresidue().times<12>(); }
  static constexpr Fp2 kGeneratorX = Fp2(
        Fp::from_hex("024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b64"
                     "7ae3d1770bac0326a805bbefd48056c8c121bdb8"),
        Fp::from_hex("13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bb"
                     "dc7f5049334cf11213945d57e5ac7d055d042b7e"));
  static constexpr Fp2 kGeneratorY = Fp2(
        Fp::from_hex("0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a69"
                     "5160d12c923ac9cc3baca289e193548608b82801"),
        Fp::from_hex("0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab"
                     "572e99ab3f370d275cec1da1aaa9075ff05f79be"));
};

// Homogeneous projective point (X : Y : Z) on a short Weierstrass curve with
// a = 0. Group operations use the complete formulas of Renes, Costello and
// Batina, so there are no exceptional inputs and no data-dependent branches.
template <class C>
class WeierstrassPoint {
 public:
  using Curve = C;
  using Field = typename C::Field;

  // The identity (0 : 1 : 0).
  WeierstrassPoint() : x_(), y_(Field::one()), z_() {}

  static WeierstrassPoint identity() { return WeierstrassPoint(); }

  static const WeierstrassPoint& generator() {
    static const WeierstrassPoint g = [] {
      Uncounted quiet;
      return from_affine(C::kGeneratorX, C::kGeneratorY);
    }();
    return g;
  }

  // Throws DomainError if (x, y) is not on the curve.
  static WeierstrassPoint from_affine(const Field& x, const Field& y) {
    WeierstrassPoint p(x, y, Field::one());
    Uncounted quiet;
    if (!p.is_on_curve()) {
      throw DomainError(std::string(C::kName) + " point not on curve");
    }
    return p;
  }

  static WeierstrassPoint from_projective(const Field& x, const Field& y,
                                          const Field& z) {
    WeierstrassPoint p(x, y, z);
    Uncounted quiet;
    if (!p.is_on_curve()) {
      throw DomainError(std::string(C::kName) + " point not on curve");
    }
    return p;
  }

  // No validation. For tests that need invalid points.
  static WeierstrassPoint from_projective_unchecked(const Field& x,
                                                    const Field& y,
                                                    const Field& z) {
    return WeierstrassPoint(x, y, z);
  }

  const Field& x() const { return x_; }
  const Field& y() const { return y_; }
  const Field& z() const { return z_; }

  // Y^2 Z = X^3 + b Z^3, excluding (0 : 0 : 0).
  bool is_on_curve() const {
    if (x_.is_zero() && y_.is_zero() && z_.is_zero()) return false;
    const Field z2 = z_.square();
    return y_.square() * z_ == x_.square() * x_ + C::b() * z2 * z_;
  }

  std::uint64_t identity_mask() const { return z_.zero_mask(); }
  bool is_identity() const { return z_.is_zero(); }

  // True for the identity or a point with Z = 1.
  bool is_normalized() const { return is_identity() || z_ == Field::one(); }

  // Variable-time check q * P = O.
  bool in_subgroup() const {
    Uncounted quiet;
    return mul_vartime(FqParams::kModulus).is_identity();
  }

  // Z = 1 representative via one inversion and two products. The identity
  // maps to (0 : 1 : 0) by mask.
  WeierstrassPoint normalize() const {
    const std::uint64_t inf = identity_mask();
    const Field zinv = z_.inverse_or_zero();
    WeierstrassPoint r(x_ * zinv, y_ * zinv, Field::one());
    return select(inf, identity(), r);
  }

  // Affine coordinates. Throws DomainError for the identity.
  std::pair<Field, Field> to_affine() const {
    if (is_identity()) throw DomainError("identity has no affine coordinates");
    const WeierstrassPoint n = normalize();
    return {n.x_, n.y_};
  }

  // Complete addition: 12 M + 2 m_3b.
  friend WeierstrassPoint operator+(const WeierstrassPoint& p,
                                    const WeierstrassPoint& q) {
    const Field &X1 = p.x_, &Y1 = p.y_, &Z1 = p.z_;
    const Field &X2 = q.x_, &Y2 = q.y_, &Z2 = q.z_;
    Field t0 = X1 * X2;
    Field t1 = Y1 * Y2;
    Field t2 = Z1 * Z2;
    Field t3 = X1 + Y1;
    Field t4 = X2 + Y2;
    t3 = t3 * t4;
    t4 = t0 + t1;
    t3 = t3 - t4;
    t4 = Y1 + Z1;
    Field X3 = Y2 + Z2;
    t4 = t4 * X3;
    X3 = t1 + t2;
    t4 = t4 - X3;
    X3 = X1 + Z1;
    Field Y3 = X2 + Z2;
    X3 = X3 * Y3;
    Y3 = t0 + t2;
    Y3 = X3 - Y3;
    X3 = t0 + t0;
    t0 = X3 + t0;
    t2 = C::mul_by_3b(t2);
    Field Z3 = t1 + t2;
    t1 = t1 - t2;
    Y3 = C::mul_by_3b(Y3);
    X3 = t4 * Y3;
    t2 = t3 * t1;
    X3 = t2 - X3;
    Y3 = Y3 * t0;
    t1 = t1 * Z3;
    Y3 = t1 + Y3;
    t0 = t0 * t3;
    Z3 = Z3 * t4;
    Z3 = Z3 + t0;
    return WeierstrassPoint(X3, Y3, Z3);
  }

  // The matching mixed addition with q in Z = 1 form: 11 M + 2 m_3b.
  // Complete in p; q must not be the identity.
  WeierstrassPoint add_mixed(const WeierstrassPoint& q) const {
    const Field &X1 = x_, &Y1 = y_, &Z1 = z_;
    const Field &X2 = q.x_, &Y2 = q.y_;
    Field t0 = X1 * X2;
    Field t1 = Y1 * Y2;
    Field t3 = X2 + Y2;
    Field t4 = X1 + Y1;
    t3 = t3 * t4;
    t4 = t0 + t1;
    t3 = t3 - t4;
    t4 = Y2 * Z1;
    t4 = t4 + Y1;
    Field Y3 = X2 * Z1;
    Y3 = Y3 + X1;
    Field X3 = t0 + t0;
    t0 = X3 + t0;
    Field t2 = C::mul_by_3b(Z1);
    Field Z3 = t1 + t2;
    t1 = t1 - t2;
    Y3 = C::mul_by_3b(Y3);
    X3 = t4 * Y3;
    t2 = t3 * t1;
    X3 = t2 - X3;
    Y3 = Y3 * t0;
    t1 = t1 * Z3;
    Y3 = t1 + Y3;
    t0 = t0 * t3;
    Z3 = Z3 * t4;
    Z3 = Z3 + t0;
    return WeierstrassPoint(X3, Y3, Z3);
  }

  // Exception-free doubling for a = 0: 6 M + 2 S + 1 m_3b.
  WeierstrassPoint dbl() const {
    Field t0 = y_.square();
    Field Z3 = t0 + t0;
    Z3 = Z3 + Z3;
    Z3 = Z3 + Z3;
    Field t1 = y_ * z_;
    Field t2 = z_.square();
    t2 = C::mul_by_3b(t2);
    Field X3 = t2 * Z3;
    Field Y3 = t0 + t2;
    Z3 = t1 * Z3;
    t1 = t2 + t2;
    t2 = t1 + t2;
    t0 = t0 - t2;
    Y3 = t0 * Y3;
    Y3 = X3 + Y3;
    t1 = x_ * y_;
    X3 = t0 * t1;
    X3 = X3 + X3;
    return WeierstrassPoint(X3, Y3, Z3);
  }

  friend WeierstrassPoint operator-(const WeierstrassPoint& p) {
    return WeierstrassPoint(p.x_, -p.y_, p.z_);
  }
  friend WeierstrassPoint operator-(const WeierstrassPoint& p,
                                    const WeierstrassPoint& q) {
    return p + (-q);
  }

  // Double-and-add for public scalars only (cofactors, subgroup checks).
  template <std::size_t N>
  WeierstrassPoint mul_vartime(const UInt<N>& k) const {
    WeierstrassPoint r;
    for (std::size_t i = k.bit_length(); i-- > 0;) {
      r = r.dbl();
      if (k.bit(i)) r = r + *this;
    }
    return r;
  }

  static WeierstrassPoint select(std::uint64_t mask, const WeierstrassPoint& a,
                                 const WeierstrassPoint& b) {
    return WeierstrassPoint(Field::select(mask, a.x_, b.x_),
                            Field::select(mask, a.y_, b.y_),
                            Field::select(mask, a.z_, b.z_));
  }

  // Projective equality; not counted.
  friend bool operator==(const WeierstrassPoint& p, const WeierstrassPoint& q) {
    Uncounted quiet;
    return p.x_ * q.z_ == q.x_ * p.z_ && p.y_ * q.z_ == q.y_ * p.z_;
  }

 private:
  WeierstrassPoint(const Field& x, const Field& y, const Field& z)
      : x_(x), y_(y), z_(z) {}

  Field x_, y_, z_;
};

using G1Point = WeierstrassPoint<G1Curve>;
using G2Point = WeierstrassPoint<G2Curve>;

}  // namespace ctbls
