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

#include "ctbls/counters.hpp"
#include "ctbls/scalar.hpp"
#include "ctbls/weierstrass.hpp"

namespace ctbls {

namespace detail {

template <class C>
void require_on_curve(const WeierstrassPoint<C>& p) {
  Uncounted quiet;
  if (!p.is_on_curve()) {
    throw DomainError(std::string(C::kName) + " ECSM input is not on the curve");
  }
}

}  // namespace detail

// k*P by double-and-add-always over exactly `bits` iterations. Each
// iteration doubles, adds the affine base with the mixed formula, and keeps
// the sum or the double by mask. The result is normalized (one inversion).
//
// A base that is not already in Z = 1 form is normalized first, which costs
// one more inversion. The identity is swapped for the generator and the
// result masked back, so it goes through the same operations.
template <class C, std::size_t N>
WeierstrassPoint<C> ecsm(const UInt<N>& k, const WeierstrassPoint<C>& p,
                         std::size_t bits = Scalar::kBits) {
  using Point = WeierstrassPoint<C>;
  if (bits > 64 * N || k.bit_length() > bits) {
    throw UsageError("scalar wider than the processed bit length");
  }
  detail::require_on_curve(p);
  const Point base0 = p.is_normalized() ? p : p.normalize();
  const std::uint64_t inf = base0.identity_mask();
  const Point base = Point::select(inf, Point::generator(), base0);
  Point r;
  for (std::size_t i = bits; i-- > 0;) {
    r = r.dbl();
    const Point t = r.add_mixed(base);
    r = Point::select(bit_mask(k, i), t, r);
  }
  r = Point::select(inf, Point(), r);
  return r.normalize();
}

template <class C>
WeierstrassPoint<C> ecsm(const Scalar& k, const WeierstrassPoint<C>& p) {
  return ecsm(k.value(), p, Scalar::kBits);
}

// Constant-time lookup of table[index] for index in [0, 4).
template <class C>
WeierstrassPoint<C> ct_lookup(const std::array<WeierstrassPoint<C>, 4>& table,
                              std::uint64_t index) {
  WeierstrassPoint<C> r;
  for (std::uint64_t j = 0; j < 4; ++j) {
    const std::uint64_t diff = index ^ j;
    const std::uint64_t mask = ((diff | (std::uint64_t{0} - diff)) >> 63) - 1;
    r = WeierstrassPoint<C>::select(mask, table[j], r);
  }
  return r;
}

// Shamir's trick with a fixed 4-entry table. Every iteration doubles once
// and adds the table entry picked by the two bits with the complete formula
// (entry 0 is the identity, so the add is never skipped).
template <class C>
WeierstrassPoint<C> multi_exp_with_table(
    const UInt<4>& k1, const UInt<4>& k2,
    const std::array<WeierstrassPoint<C>, 4>& table, std::size_t bits) {
  if (bits > 256 || k1.bit_length() > bits || k2.bit_length() > bits) {
    throw UsageError("scalar wider than the processed bit length");
  }
  WeierstrassPoint<C> r;
  for (std::size_t i = bits; i-- > 0;) {
    r = r.dbl();
    const std::uint64_t index = (bit_mask(k1, i) & 1) | (bit_mask(k2, i) & 2);
    r = r + ct_lookup(table, index);
  }
  return r.normalize();
}

// k1*P1 + k2*P2 with shared doublings.
template <class C>
WeierstrassPoint<C> multi_exp(const UInt<4>& k1, const WeierstrassPoint<C>& p1,
                              const UInt<4>& k2, const WeierstrassPoint<C>& p2,
                              std::size_t bits = Scalar::kBits) {
  detail::require_on_curve(p1);
  detail::require_on_curve(p2);
  const std::array<WeierstrassPoint<C>, 4> table = {WeierstrassPoint<C>(), p1,
                                                    p2, p1 + p2};
  return multi_exp_with_table(k1, k2, table, bits);
}

}  // namespace ctbls
