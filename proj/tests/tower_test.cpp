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

#include <gtest/gtest.h>

#include "ctbls/fp12.hpp"
#include "oracle/tower_oracle.hpp"

namespace ctbls {
namespace {

using oracle::random_fp12;
using oracle::random_fp2;
using oracle::random_fp6;

Fp12 easy_part(const Fp12& f) {
  const Fp12 t = f.conjugate() * f.inverse();
  return t.frobenius(2) * t;
}

TEST(Fp2Test, DefiningRelation) {
  const Fp2 alpha(Fp::zero(), Fp::one());
  EXPECT_EQ(alpha * alpha, -Fp2::one());
  EXPECT_EQ(alpha.square(), -Fp2::one());
  const Fp2 one_plus_alpha(Fp::one(), Fp::one());
  EXPECT_EQ(one_plus_alpha.square(), Fp2(Fp::zero(), Fp::from_u64(2)));
  EXPECT_EQ(Fp2::xi().mul_by_nonresidue(), Fp2::xi() * Fp2::xi());
}

TEST(Fp2Test, MatchesOracle) {
  oracle::Sampler rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Fp2 x = random_fp2(rng), y = random_fp2(rng);
    EXPECT_EQ(oracle::to_z2(x * y), oracle::to_z2(x) * oracle::to_z2(y));
    EXPECT_EQ(x.square(), x * x);
    EXPECT_EQ(oracle::to_z2(x + y), oracle::to_z2(x) + oracle::to_z2(y));
    EXPECT_EQ(x * x.inverse(), Fp2::one());
    EXPECT_EQ(x.mul_by_nonresidue(), x * Fp2::xi());
  }
  EXPECT_THROW(Fp2::zero().inverse(), DomainError);
}

TEST(Fp2Test, ExactCosts) {
  oracle::Sampler rng(43);
  const Fp2 x = random_fp2(rng), y = random_fp2(rng);
  {
    Measurement m;
    (void)(x * y);
    EXPECT_EQ(m.delta().m1, 3u);
    EXPECT_EQ(m.delta().s1, 0u);
    EXPECT_EQ(m.delta().m2, 1u);
  }
  {
    Measurement m;
    (void)x.square();
    EXPECT_EQ(m.delta().m1, 2u);
    EXPECT_EQ(m.delta().s1, 0u);
    EXPECT_EQ(m.delta().s2, 1u);
  }
  {
    Measurement m;
    (void)x.inverse();
    const OpCounter d = m.delta();
    EXPECT_EQ(d.m1 + d.s1, 4u);
    EXPECT_EQ(d.a1, 2u);
    EXPECT_EQ(d.i1, 1u);
    EXPECT_EQ(d.i2, 1u);
  }
}

TEST(Fp2Test, SquareRoot) {
  oracle::Sampler rng(47);
  int found = 0;
  for (int i = 0; i < 50; ++i) {
    const Fp2 x = random_fp2(rng);
    const auto r = x.square().sqrt();
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(*r == x || *r == -x);
    if (x.sqrt()) ++found;
  }
  EXPECT_GT(found, 10);
  EXPECT_LT(found, 40);
}

TEST(Fp6Test, LawsAndSparseProducts) {
  oracle::Sampler rng(53);
  for (int i = 0; i < 200; ++i) {
    const Fp6 a = random_fp6(rng), b = random_fp6(rng), c = random_fp6(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a.square(), a * a);
    EXPECT_EQ(a * a.inverse(), Fp6::one());
    const Fp2 b0 = random_fp2(rng), b1 = random_fp2(rng);
    EXPECT_EQ(a.mul_by_01(b0, b1), a * Fp6(b0, b1, Fp2::zero()));
    EXPECT_EQ(a.mul_by_1(b1), a * Fp6(Fp2::zero(), b1, Fp2::zero()));
    EXPECT_EQ(a.mul_by_nonresidue(), a * Fp6(Fp2::zero(), Fp2::one(), Fp2::zero()));
  }
  // v^3 = 1 + a.
  const Fp6 v(Fp2::zero(), Fp2::one(), Fp2::zero());
  EXPECT_EQ(v * v * v, Fp6(Fp2::xi()));
  Measurement m;
  (void)(random_fp6(rng) * random_fp6(rng));
  EXPECT_EQ(m.delta().m2, 6u);
}

TEST(Fp12Test, MatchesSchoolbookOracle) {
  oracle::Sampler rng(59);
  for (int i = 0; i < 1000; ++i) {
    const Fp12 x = random_fp12(rng), y = random_fp12(rng);
    ASSERT_EQ(oracle::to_z12(x * y),
              oracle::mul(oracle::to_z12(x), oracle::to_z12(y)));
    EXPECT_EQ(x.square(), x * x);
    if (i % 10 == 0) {
      EXPECT_EQ(x * x.inverse(), Fp12::one());
    }
  }
  // w^2 = v.
  const Fp12 w(Fp6::zero(), Fp6::one());
  EXPECT_EQ(w * w, Fp12(Fp6(Fp2::zero(), Fp2::one(), Fp2::zero())));
}

TEST(Fp12Test, ExactCosts) {
  oracle::Sampler rng(61);
  const Fp12 x = random_fp12(rng), y = random_fp12(rng);
  Measurement m;
  (void)(x * y);
  EXPECT_EQ(m.delta().m2, 18u);
  EXPECT_EQ(m.delta().m1, 54u);
  Measurement s;
  (void)x.square();
  EXPECT_EQ(s.delta().m1 + s.delta().s1, 36u);
  Measurement l;
  (void)x.mul_by_014(y.c0.c0, y.c0.c1, y.c1.c1);
  EXPECT_EQ(l.delta().m2, 13u);
}

TEST(Fp12Test, SparseLineProduct) {
  oracle::Sampler rng(67);
  for (int i = 0; i < 100; ++i) {
    const Fp12 x = random_fp12(rng);
    const Fp2 b0 = random_fp2(rng), b1 = random_fp2(rng), b4 = random_fp2(rng);
    const Fp12 line(Fp6(b0, b1, Fp2::zero()), Fp6(Fp2::zero(), b4, Fp2::zero()));
    EXPECT_EQ(x.mul_by_014(b0, b1, b4), x * line);
  }
}

TEST(Fp12Test, FrobeniusMatchesExponentiation) {
  oracle::Sampler rng(71);
  const mpz_class& p = oracle::p();
  for (int i = 0; i < 5; ++i) {
    const Fp12 x = random_fp12(rng);
    const auto z = oracle::to_z12(x);
    EXPECT_EQ(oracle::to_z12(x.frobenius(1)), oracle::pow(z, p));
    EXPECT_EQ(oracle::to_z12(x.frobenius(2)), oracle::pow(z, p * p));
    EXPECT_EQ(oracle::to_z12(x.frobenius(3)), oracle::pow(z, p * p * p));
    EXPECT_EQ(x.frobenius(6), x.frobenius(3).frobenius(3));
  }
  for (int i = 0; i < 100; ++i) {
    const Fp12 x = random_fp12(rng);
    EXPECT_EQ(x.frobenius(2), x.frobenius(1).frobenius(1));
    Fp12 y = x;
    for (int k = 0; k < 12; ++k) y = y.frobenius(1);
    EXPECT_EQ(y, x);
  }
  const Fp12 embedded(Fp6(Fp2(rng.field<Fp>(), Fp::zero())));
  EXPECT_EQ(embedded.frobenius(1), embedded);
  EXPECT_THROW((void)embedded.frobenius(4), UsageError);
}

TEST(Fp12Test, CyclotomicSquare) {
  oracle::Sampler rng(73);
  EXPECT_EQ(Fp12::one().cyclotomic_square(), Fp12::one());
  for (int i = 0; i < 1000; ++i) {
    const Fp12 f = easy_part(random_fp12(rng));
    ASSERT_EQ(f.cyclotomic_square(), f.square());
    if (i % 50 == 0) {
      EXPECT_EQ(f.conjugate() * f, Fp12::one());
    }
  }
  const Fp12 f = easy_part(random_fp12(rng));
  Measurement a;
  (void)f.cyclotomic_square();
  Measurement b;
  (void)f.square();
  const auto generic = b.delta();
  const auto cyclo = a.delta() - generic;
  EXPECT_EQ(cyclo.s2, 9u);
  EXPECT_LT(cyclo.m1 + cyclo.s1, generic.m1 + generic.s1);
}

TEST(Fp12Test, BytesRoundTrip) {
  oracle::Sampler rng(79);
  const Fp12 x = random_fp12(rng);
  const auto b = x.to_bytes();
  EXPECT_EQ(Fp12::from_bytes(b), x);
  const auto first = x.c0.c0.c0.to_bytes();
  EXPECT_TRUE(std::equal(first.begin(), first.end(), b.begin()));
  const auto last = x.c1.c2.c1.to_bytes();
  EXPECT_TRUE(std::equal(last.begin(), last.end(), b.end() - 48));
}

TEST(TowerTest, EmbeddingCommutes) {
  oracle::Sampler rng(83);
  for (int i = 0; i < 100; ++i) {
    const Fp a = rng.field<Fp>(), b = rng.field<Fp>();
    const auto lift = [](const Fp& x) { return Fp12(Fp6(Fp2(x))); };
    EXPECT_EQ(lift(a) * lift(b), lift(a * b));
    EXPECT_EQ(lift(a) + lift(b), lift(a + b));
    EXPECT_EQ(lift(a).square(), lift(a.square()));
    EXPECT_EQ(Fp2(a) * Fp2(b), Fp2(a * b));
  }
}

}  // namespace
}  // namespace ctbls
