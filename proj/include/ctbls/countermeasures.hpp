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
#include <string>
#include <type_traits>
#include <vector>

#include "ctbls/csprng.hpp"
#include "ctbls/ecsm.hpp"
#include "ctbls/pairing.hpp"
#include "ctbls/scalar.hpp"

namespace ctbls {

// One random value drawn by a countermeasure, kept for replay.
struct TranscriptEntry {
  std::string label;
  std::string value;  // hex
};

// Which DPA countermeasures are on, and where their randomness comes from.
// With every flag off the hardened entry points are the plain ones.
struct CountermeasureConfig {
  bool randomized_projective = false;
  bool scalar_splitting = false;
  bool randomized_pairing = false;
  Csprng rng{Csprng::Seed{}};
  std::vector<TranscriptEntry> transcript;

  static CountermeasureConfig all(Csprng rng) {
    return {true, true, true, std::move(rng), {}};
  }
  static CountermeasureConfig none() { return {}; }
};

namespace detail {

template <class F>
F random_scale(Csprng& rng) {
  if constexpr (std::is_same_v<F, Fp>) {
    return rng.random_nonzero_field_element<Fp>();
  } else {
    for (;;) {
      const Fp2 s(rng.random_field_element<Fp>(), rng.random_field_element<Fp>());
      if (!s.is_zero()) return s;
    }
  }
}

inline std::string to_hex(const Fp& x) { return x.to_hex(); }
inline std::string to_hex(const Fp2& x) { return x.c1.to_hex() + x.c0.to_hex(); }

// (a - b) mod q for canonical a, b, without branching on the borrow.
inline UInt<4> sub_mod_q(const UInt<4>& a, const UInt<4>& b) {
  UInt<4> d = a;
  const std::uint64_t borrow = sub_in_place(d, b);
  UInt<4> q = FqParams::kModulus;
  const std::uint64_t mask = std::uint64_t{0} - borrow;
  for (auto& l : q.limb) l &= mask;
  add_in_place(d, q);
  return d;
}

}  // namespace detail

// k*P with optional blinding. Randomized projective coordinates replace the
// base by (lX : lY : lZ) for a fresh nonzero l, which forces the complete
// addition formula instead of the mixed one. Scalar splitting draws r and
// evaluates rP + (k - r)P with one shared doubling chain over the table
// {O, P, P, 2P}. The affine result does not depend on any of the draws.
template <class C>
WeierstrassPoint<C> hardened_ecsm(const Scalar& k, const WeierstrassPoint<C>& p,
                                  CountermeasureConfig& config) {
  using Point = WeierstrassPoint<C>;
  using Field = typename C::Field;
  if (!config.randomized_projective && !config.scalar_splitting) {
    return ecsm(k, p);
  }
  detail::require_on_curve(p);
  Point base = p;
  if (config.randomized_projective) {
    const Field l = detail::random_scale<Field>(config.rng);
    config.transcript.push_back({"lambda", detail::to_hex(l)});
    base = Point::from_projective_unchecked(p.x() * l, p.y() * l, p.z() * l);
  }
  if (config.scalar_splitting) {
    const Scalar r = config.rng.random_scalar();
    config.transcript.push_back({"r", r.to_hex()});
    const UInt<4> s = detail::sub_mod_q(k.value(), r.value());
    const std::array<Point, 4> table = {Point(), base, base, base.dbl()};
    return multi_exp_with_table(r.value(), s, table, Scalar::kBits);
  }
  Point acc;
  for (std::size_t i = Scalar::kBits; i-- > 0;) {
    acc = acc.dbl();
    const Point t = acc + base;
    acc = Point::select(bit_mask(k.value(), i), t, acc);
  }
  return acc.normalize();
}

// e(aP, bQ) with a random nonzero a and b = 1/a mod q. Equals e(P, Q); costs
// one pairing, one ECSM in each group and one inversion mod q on top.
inline Gt hardened_pairing(const G1Point& p, const G2Point& q,
                           CountermeasureConfig& config) {
  if (!config.randomized_pairing) return pairing(p, q);
  const Fq a = config.rng.random_nonzero_field_element<Fq>();
  const Fq b = a.inverse();
  config.transcript.push_back({"a", a.to_hex()});
  return pairing(ecsm(Scalar::from_fq(a), p), ecsm(Scalar::from_fq(b), q));
}

}  // namespace ctbls
