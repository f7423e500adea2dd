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

#include <utility>

#include "ctbls/ecsm.hpp"
#include "ctbls/fp2.hpp"

namespace ctbls {

namespace detail {

struct SkewFrobeniusConstants {
  Fp2 cx;  // 1 / xi^((p-1)/3)
  Fp2 cy;  // 1 / xi^((p-1)/2)
};

inline const SkewFrobeniusConstants& skew_frobenius_constants() {
  static const SkewFrobeniusConstants c = [] {
    Uncounted quiet;
    const UInt<6> pm1 = FpParams::kModulus - UInt<6>(1);
    const auto [e3, r3] = divmod(pm1, UInt<1>(3));
    const auto [e2, r2] = divmod(pm1, UInt<1>(2));
    return SkewFrobeniusConstants{Fp2::xi().pow(e3).inverse(),
                                  Fp2::xi().pow(e2).inverse()};
  }();
  return c;
}

}  // namespace detail

// psi = twist^-1 o Frobenius o twist on E'(Fp2). On G2 it acts as
// multiplication by p, which is u mod q. Costs two Fp2 products and three
// conjugations; Z = 1 is preserved.
inline G2Point skew_frobenius(const G2Point& p) {
  const auto& c = detail::skew_frobenius_constants();
  return G2Point::from_projective_unchecked(p.x().conjugate() * c.cx,
                                            p.y().conjugate() * c.cy,
                                            p.z().conjugate());
}

// u^2 mod q (u^2 itself, since it is 128 bits).
inline constexpr UInt<4> kUSquared = resize<4>(mul_wide(UInt<1>(kBlsX), UInt<1>(kBlsX)));

// Bits processed by the split multiplication; both halves fit.
inline constexpr std::size_t kSplitBits = 128;

// k = k1 + k2 u^2 with k1 = k mod u^2 and k2 = floor(k / u^2).
inline std::pair<UInt<4>, UInt<4>> scalar_split(const Scalar& k) {
  const auto [k2, k1] = divmod(k.value(), kUSquared);
  return {k1, k2};
}

// k*P on G2 as k1*P + k2*psi^2(P), 128 shared doublings.
inline G2Point ecsm_split(const Scalar& k, const G2Point& p) {
  detail::require_on_curve(p);
  const G2Point base = p.is_normalized() ? p : p.normalize();
  const auto [k1, k2] = scalar_split(k);
  const G2Point psi2 = skew_frobenius(skew_frobenius(base));
  const std::array<G2Point, 4> table = {G2Point(), base, psi2, base + psi2};
  return multi_exp_with_table(k1, k2, table, kSplitBits);
}

}  // namespace ctbls
