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

#include "ctbls/ecsm.hpp"
#include "ctbls/endomorphism.hpp"
#include "ctbls/jubjub.hpp"
#include "ctbls/serialize.hpp"
#include "oracle/tower_oracle.hpp"

namespace ctbls {
namespace {

using oracle::to_mpz;

Scalar random_scalar(oracle::Sampler& rng) {
  return Scalar::from_uint(oracle::from_mpz<4>(rng.below(oracle::q())));
}

template <class P>
P random_point(oracle::Sampler& rng) {
  return P::generator().mul_vartime(random_scalar(rng).value());
}

template <class P>
class CurveTest : public ::testing::Test {};
using PointTypes = ::testing::Types<G1Point, G2Point>;
TYPED_TEST_SUITE(CurveTest, PointTypes);

TYPED_TEST(CurveTest, GeneratorIsValid) {
  const TypeParam& g = TypeParam::generator();
  EXPECT_TRUE(g.is_on_curve());
  EXPECT_TRUE(g.in_subgroup());
  EXPECT_FALSE(g.is_identity());
  EXPECT_TRUE(TypeParam::identity().is_on_curve());
}

TYPED_TEST(CurveTest, GroupLaws) {
  oracle::Sampler rng(101);
  const TypeParam o;
  for (int i = 0; i < 20; ++i) {
    const auto p = random_point<TypeParam>(rng);
    const auto q = random_point<TypeParam>(rng);
    const auto r = random_point<TypeParam>(rng);
    EXPECT_EQ(p + o, p);
    EXPECT_EQ(o + p, p);
    EXPECT_TRUE((p + (-p)).is_identity());
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p + p, p.dbl());
    EXPECT_EQ(p.dbl() + p, p + p + p);
    EXPECT_EQ(o.add_mixed(p.normalize()), p);
    EXPECT_EQ(p.add_mixed(p.normalize()), p.dbl());
    EXPECT_TRUE((p + q).is_on_curve());
  }
  EXPECT_TRUE(o.dbl().is_identity());
  EXPECT_TRUE((o + o).is_identity());
}

TEST(G1Test, DoublingMatchesAffineOracle) {
  oracle::Sampler rng(103);
  const mpz_class& p = oracle::p();
  for (int i = 0; i < 50; ++i) {
    const auto pt = random_point<G1Point>(rng);
    const auto [x, y] = pt.to_affine();
    const mpz_class X = to_mpz(x), Y = to_mpz(y);
    const mpz_class lambda =
        oracle::mod(3 * X * X * oracle::invert(2 * Y, p), p);
    const mpz_class x3 = oracle::mod(lambda * lambda - 2 * X, p);
    const mpz_class y3 = oracle::mod(lambda * (X - x3) - Y, p);
    const auto [dx, dy] = pt.dbl().to_affine();
    EXPECT_EQ(to_mpz(dx), x3);
    EXPECT_EQ(to_mpz(dy), y3);
  }
}

TYPED_TEST(CurveTest, EcsmBasics) {
  oracle::Sampler rng(107);
  const auto p = random_point<TypeParam>(rng);
  EXPECT_TRUE(ecsm(Scalar::from_u64(0), p).is_identity());
  EXPECT_EQ(ecsm(Scalar::from_u64(1), p), p);
  EXPECT_EQ(ecsm(Scalar::from_u64(2), p), p.dbl());
  EXPECT_TRUE(ecsm(FqParams::kModulus, TypeParam::generator()).is_identity());
  EXPECT_TRUE(ecsm(Scalar::from_u64(5), TypeParam()).is_identity());
  for (int i = 0; i < 5; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    const mpz_class A = to_mpz(a.value()), B = to_mpz(b.value());
    const auto sum = Scalar::from_uint(oracle::from_mpz<4>((A + B) % oracle::q()));
    const auto prod = Scalar::from_uint(oracle::from_mpz<4>((A * B) % oracle::q()));
    EXPECT_EQ(ecsm(sum, p), ecsm(a, p) + ecsm(b, p));
    EXPECT_EQ(ecsm(prod, p), ecsm(a, ecsm(b, p)));
    EXPECT_EQ(ecsm(a, p), p.mul_vartime(a.value()));
  }
}

TYPED_TEST(CurveTest, EcsmRejectsInvalidPoint) {
  using F = typename TypeParam::Field;
  const auto bad = TypeParam::from_projective_unchecked(F::one(), F::one(), F::one());
  EXPECT_THROW(ecsm(Scalar::from_u64(3), bad), DomainError);
  EXPECT_THROW(TypeParam::from_affine(F::one(), F::one()), DomainError);
}

TEST(G1Test, EcsmCostIsExact) {
  oracle::Sampler rng(109);
  const G1Point p = G1Point::generator();
  for (int i = 0; i < 3; ++i) {
    const Scalar k = random_scalar(rng);
    Measurement m;
    (void)ecsm(k, p);
    const OpCounter d = m.delta();
    EXPECT_EQ(d.m1, 4337u);
    EXPECT_EQ(d.s1, 510u);
    EXPECT_EQ(d.m1 + d.s1, 4847u);
    EXPECT_EQ(d.a1, 14025u);
    EXPECT_EQ(d.i1, 1u);
  }
}

TEST(G2Test, EcsmCostMatchesStructure) {
  oracle::Sampler rng(113);
  const Scalar k = random_scalar(rng);
  Measurement m;
  (void)ecsm(k, G2Point::generator());
  const OpCounter d = m.delta();
  EXPECT_EQ(d.m2, 4337u);
  EXPECT_EQ(d.s2, 510u);
  EXPECT_EQ(d.i2, 1u);
  EXPECT_EQ(d.i1, 1u);
  // Per bit: 35 + 20 Fp2 additions, plus 3 products by xi (2 Fp additions
  // each, not Fp2-level ops).
  EXPECT_EQ(d.a2, 255u * 55u);
}

TYPED_TEST(CurveTest, EcsmTraceIsScalarIndependent) {
  oracle::Sampler rng(127);
  const auto p = random_point<TypeParam>(rng).normalize();
  Engine& e = current_engine();
  e.start_trace();
  (void)ecsm(Scalar::from_u64(1), p);
  const auto reference = e.take_trace();
  for (int i = 0; i < 5; ++i) {
    e.start_trace();
    (void)ecsm(random_scalar(rng), p);
    EXPECT_EQ(e.take_trace(), reference);
  }
}

TYPED_TEST(CurveTest, AdditionTraceIsInputIndependent) {
  oracle::Sampler rng(131);
  const auto p = random_point<TypeParam>(rng), q = random_point<TypeParam>(rng);
  Engine& e = current_engine();
  e.start_trace();
  (void)(p + q);
  const auto t1 = e.take_trace();
  e.start_trace();
  (void)(p + p);
  const auto t2 = e.take_trace();
  e.start_trace();
  (void)(p + TypeParam());
  const auto t3 = e.take_trace();
  EXPECT_EQ(t1, t2);
  EXPECT_EQ(t1, t3);
}

TYPED_TEST(CurveTest, MultiExp) {
  oracle::Sampler rng(137);
  const auto p = random_point<TypeParam>(rng), q = random_point<TypeParam>(rng);
  EXPECT_EQ(multi_exp(UInt<4>(1), p, UInt<4>(0), q), p);
  for (int i = 0; i < 5; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_EQ(multi_exp(a.value(), p, b.value(), q), ecsm(a, p) + ecsm(b, q));
  }
}

TEST(EndomorphismTest, SkewFrobeniusActsAsP) {
  oracle::Sampler rng(139);
  EXPECT_TRUE(skew_frobenius(G2Point()).is_identity());
  const Scalar p_mod_q = Scalar::from_uint(
      oracle::from_mpz<4>(oracle::p() % oracle::q()));
  const Scalar u2 = Scalar::from_uint(kUSquared);
  for (int i = 0; i < 5; ++i) {
    const G2Point a = random_point<G2Point>(rng);
    const G2Point b = random_point<G2Point>(rng);
    EXPECT_EQ(skew_frobenius(a), ecsm(p_mod_q, a));
    EXPECT_EQ(skew_frobenius(skew_frobenius(a)), ecsm(u2, a));
    EXPECT_EQ(skew_frobenius(a + b), skew_frobenius(a) + skew_frobenius(b));
  }
}

TEST(EndomorphismTest, ScalarSplit) {
  EXPECT_EQ(scalar_split(Scalar::from_u64(0)),
            std::make_pair(UInt<4>(0), UInt<4>(0)));
  EXPECT_EQ(scalar_split(Scalar::from_uint(kUSquared)),
            std::make_pair(UInt<4>(0), UInt<4>(1)));
  oracle::Sampler rng(149);
  const mpz_class u2 = to_mpz(kUSquared);
  for (int i = 0; i < 1000; ++i) {
    const Scalar k = random_scalar(rng);
    const auto [k1, k2] = scalar_split(k);
    EXPECT_LE(k1.bit_length(), 128u);
    EXPECT_LE(k2.bit_length(), 128u);
    EXPECT_EQ((to_mpz(k1) + to_mpz(k2) * u2) % oracle::q(), to_mpz(k.value()));
  }
}

TEST(EndomorphismTest, SplitEcsmMatchesPlain) {
  oracle::Sampler rng(151);
  const G2Point p = random_point<G2Point>(rng);
  for (int i = 0; i < 5; ++i) {
    const Scalar k = random_scalar(rng);
    EXPECT_EQ(ecsm_split(k, p), ecsm(k, p));
  }
  EXPECT_TRUE(ecsm_split(Scalar::from_u64(7), G2Point()).is_identity());
}

TEST(JubjubTest, GeneratorAndOrder) {
  const JubjubPoint& g = JubjubPoint::generator();
  EXPECT_TRUE(g.is_on_curve());
  EXPECT_TRUE(g.in_subgroup());
  EXPECT_FALSE(g.is_identity());
  EXPECT_EQ(jubjub_ecsm(UInt<4>(1), g), g);
  EXPECT_TRUE(jubjub_ecsm(Jubjub::kOrder, g).is_identity());
  // d = -10240/10241.
  EXPECT_EQ(Jubjub::kD * Fq::from_u64(10241), -Fq::from_u64(10240));
  EXPECT_FALSE(Jubjub::kD.is_square());
}

TEST(JubjubTest, GroupLawsAndEcsm) {
  oracle::Sampler rng(157);
  const JubjubPoint& g = JubjubPoint::generator();
  const mpz_class r = to_mpz(Jubjub::kOrder);
  for (int i = 0; i < 10; ++i) {
    const mpz_class a = rng.below(r), b = rng.below(r);
    const auto pa = jubjub_ecsm(oracle::from_mpz<4>(a), g);
    const auto pb = jubjub_ecsm(oracle::from_mpz<4>(b), g);
    EXPECT_EQ(pa + pb, jubjub_ecsm(oracle::from_mpz<4>((a + b) % r), g));
    EXPECT_EQ(pa + pa, pa.dbl());
    EXPECT_EQ(pa + JubjubPoint(), pa);
    EXPECT_TRUE((pa + (-pa)).is_identity());
    EXPECT_EQ(pa, g.mul_vartime(oracle::from_mpz<4>(a)));
  }
  EXPECT_TRUE(JubjubPoint().dbl().is_identity());
}

TEST(JubjubTest, CostAndTrace) {
  oracle::Sampler rng(163);
  const JubjubPoint& g = JubjubPoint::generator();
  Engine& e = current_engine();
  std::vector<OpKind> reference;
  for (int i = 0; i < 3; ++i) {
    const auto k = oracle::from_mpz<4>(rng.below(to_mpz(Jubjub::kOrder)));
    Measurement m;
    e.start_trace();
    (void)jubjub_ecsm(k, g);
    const auto trace = e.take_trace();
    if (i == 0) reference = trace;
    EXPECT_EQ(trace, reference);
    EXPECT_EQ(m.delta().fq_mults(), 252u * 19u + 2u);
    EXPECT_EQ(m.delta().fq_i, 1u);
    EXPECT_EQ(m.delta().m1, 0u);
  }
  const auto bad = JubjubPoint::from_projective_unchecked(Fq::one(), Fq::one(), Fq::one());
  EXPECT_THROW(jubjub_ecsm(UInt<4>(3), bad), DomainError);
}

TEST(SerializeTest, KnownEncodings) {
  const auto g1 = serialize_compressed(G1Point::generator());
  EXPECT_EQ(UInt<6>::from_bytes_be(g1).to_hex(),
            "97f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55"
            "e83ff97a1aeffb3af00adb22c6bb");
  const auto g2 = serialize_compressed(G2Point::generator());
  EXPECT_EQ(g2[0], 0x93);
  EXPECT_EQ(g2[47], 0x7e);
  const auto inf = serialize_compressed(G1Point());
  EXPECT_EQ(inf[0], 0xc0);
  EXPECT_TRUE(deserialize_g1(inf).is_identity());
  EXPECT_TRUE(deserialize_g2(serialize_uncompressed(G2Point())).is_identity());
}

template <class P, class Enc, class Dec>
void check_round_trip_and_fuzz(oracle::Sampler& rng, Enc enc, Dec dec) {
  for (int i = 0; i < 10; ++i) {
    const P p = random_point<P>(rng);
    const auto bytes = enc(p);
    EXPECT_EQ(dec(bytes), p);
    for (int j = 0; j < 8; ++j) {
      auto bad = bytes;
      const std::size_t pos = rng.below(bytes.size()).get_ui();
      bad[pos] ^= 0xff;
      EXPECT_THROW((void)dec(bad), DecodeError) << "pos " << pos;
    }
  }
}

TEST(SerializeTest, RoundTripsAndRejectsCorruption) {
  oracle::Sampler rng(167);
  check_round_trip_and_fuzz<G1Point>(
      rng, [](const G1Point& p) { return serialize_compressed(p); },
      [](auto b) { return deserialize_g1(b); });
  check_round_trip_and_fuzz<G1Point>(
      rng, [](const G1Point& p) { return serialize_uncompressed(p); },
      [](auto b) { return deserialize_g1(b); });
  check_round_trip_and_fuzz<G2Point>(
      rng, [](const G2Point& p) { return serialize_compressed(p); },
      [](auto b) { return deserialize_g2(b); });
  check_round_trip_and_fuzz<G2Point>(
      rng, [](const G2Point& p) { return serialize_uncompressed(p); },
      [](auto b) { return deserialize_g2(b); });
}

DecodeErrorKind kind_of(std::span<const std::uint8_t> b) {
  try {
    (void)deserialize_g1(b);
  } catch (const DecodeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted";
  return DecodeErrorKind::kMalformed;
}

TEST(SerializeTest, DistinctErrorKinds) {
  std::array<std::uint8_t, 96> raw{};
  EXPECT_EQ(kind_of(std::span(raw).first(40)), DecodeErrorKind::kMalformed);
  // (0, 2) is on the curve but has order 3.
  raw[95] = 2;
  EXPECT_EQ(kind_of(raw), DecodeErrorKind::kNotInSubgroup);
  raw[95] = 3;
  EXPECT_EQ(kind_of(raw), DecodeErrorKind::kNotOnCurve);
  auto p = serialize_uncompressed(G1Point::generator());
  p[0] |= 0x80;
  EXPECT_EQ(kind_of(p), DecodeErrorKind::kMalformed);
}

}  // namespace
}  // namespace ctbls
