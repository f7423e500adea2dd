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

// Schoolbook extension-field reference over GMP integers. Fp12 is modelled
// directly as Fp2[w] / (w^6 - (1 + a)), so it shares no structure with the
// library's Karatsuba tower.

#include <array>

#include "ctbls/fp12.hpp"
#include "oracle/gmp_oracle.hpp"

namespace ctbls::oracle {

struct Z2 {
  mpz_class a, b;  // a + b*i, i^2 = -1

  friend Z2 operator+(const Z2& x, const Z2& y) {
    return {mod(x.a + y.a, p()), mod(x.b + y.b, p())};
  }
  friend Z2 operator-(const Z2& x, const Z2& y) {
    return {mod(x.a - y.a, p()), mod(x.b - y.b, p())};
  }
  friend Z2 operator*(const Z2& x, const Z2& y) {
    return {mod(x.a * y.a - x.b * y.b, p()), mod(x.a * y.b + x.b * y.a, p())};
  }
  friend bool operator==(const Z2& x, const Z2& y) {
    return x.a == y.a && x.b == y.b;
  }
};

inline Z2 z2_xi() { return {1, 1}; }

using Z12 = std::array<Z2, 6>;  // coefficients of w^0..w^5

inline Z12 z12_one() {
  Z12 r;
  for (auto& c : r) c = {0, 0};
  r[0] = {1, 0};
  return r;
}

inline Z12 mul(const Z12& x, const Z12& y) {
  std::array<Z2, 11> t;
  for (auto& c : t) c = {0, 0};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) t[i + j] = t[i + j] + x[i] * y[j];
  }
  Z12 r;
  for (int i = 0; i < 6; ++i) r[i] = t[i];
  for (int i = 6; i < 11; ++i) r[i - 6] = r[i - 6] + t[i] * z2_xi();
  return r;
}

inline Z12 pow(const Z12& x, const mpz_class& e) {
  Z12 r = z12_one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, x);
  }
  return r;
}

inline Z2 to_z2(const Fp2& x) { return {to_mpz(x.c0), to_mpz(x.c1)}; }

inline Fp2 from_z2(const Z2& x) {
  return Fp2(field_from_mpz<Fp>(x.a), field_from_mpz<Fp>(x.b));
}

inline Z12 to_z12(const Fp12& x) {
  const auto c = x.w_coefficients();
  Z12 r;
  for (int i = 0; i < 6; ++i) r[i] = to_z2(c[i]);
  return r;
}

inline Fp12 from_z12(const Z12& x) {
  std::array<Fp2, 6> c;
  for (int i = 0; i < 6; ++i) c[i] = from_z2(x[i]);
  return Fp12::from_w_coefficients(c);
}

inline Fp2 random_fp2(Sampler& rng) {
  return Fp2(rng.field<Fp>(), rng.field<Fp>());
}
inline Fp6 random_fp6(Sampler& rng) {
  return Fp6(random_fp2(rng), random_fp2(rng), random_fp2(rng));
}
inline Fp12 random_fp12(Sampler& rng) {
  return Fp12(random_fp6(rng), random_fp6(rng));
}

}  // namespace ctbls::oracle
