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

#include <array>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "ctbls/ecsm.hpp"
#include "ctbls/pairing.hpp"
#include "oracle/tower_oracle.hpp"

namespace ctbls {
namespace {

using oracle::to_mpz;

Scalar random_scalar(oracle::Sampler& rng) {
  return Scalar::from_uint(oracle::from_mpz<4>(rng.below(oracle::q())));
}

// e(G1, G2) under the exact exponent (p^12 - 1)/q, from an independent
// Python implementation, written over 1, w, ..., w^5 with Fp2 coefficients.
// That implementation loops over |u| and never conjugates, so it yields the
// inverse of the pairing for the negative u used here.
const std::array<std::array<const char*, 2>, 6> kReducedPairingOfGenerators = {{
    {"11619b45f61edfe3b47a15fac19442526ff489dcda25e59121d9931438907dfd448299a87dde3a649bdba96e84d54558",
     "153ce14a76a53e205ba8f275ef1137c56a566f638b52d34ba3bf3bf22f277d70f76316218c0dfd583a394b8448d2be7f"},
    {"181414f71cf9c11f9b1060ac800c903b1676d52b16251674f3df408a79cf5f1e91b0b36a8ef580e44dd85264597046ef",
     "11780ac3c545c705a3026d9fdb4af55eed32a2d765557f598bba4c626d657c12466c6f263dfd816255a2308da4ccd83c"},
    {"095668fb4a02fe930ed44767834c915b283b1c6ca98c047bd4c272e9ac3f3ba6ff0b05a93e59c71fba77bce995f04692",
     "16deedaa683124fe7260085184d88f7d036b86f53bb5b7f1fc5e248814782065413e7d958d17960109ea006b2afdeb5f"},
    {"0b9f4a97f83340ba78c2be55d79fa3fc784d97a22e14b058d1da3d5144892232f89d120c5d0d5f79097ab432bc9b3e9b",
     "0a1ad2d1da290971360be31d875d054dfa8f6401ef4ef1e43339789b560e27c7da8014ff13b26a00a4e8b3ff5498eccd"},
    {"09c92cf02f3cd3d2f9d34bc44eee0dd50314ed44ca5d30ce6a9ec0539be7a86b121edc61839ccc908c4bdde256cd6048",
     "111061f398efc2a97ff825b04d21089e24fd8b93a47e41e60eae7e9b2a38d54fa4dedced0811c34ce528781ab9e929c7"},
    {"09710eb1905115e5d0299652d3ceaeeaf2fbcca0ba8423d5b134adb0f6a49daf4a2bec8bd60c767850e2a99573b86133",
     "05ac909b08f9f5b3eaf9604f2787a41b96574464de4e9132d7131553d61b189d5cbf747622fa9ee0595bfe508888ec6e"},
}};

TEST(PairingTest, MatchesIndependentImplementation) {
  std::array<Fp2, 6> c;
  for (int i = 0; i < 6; ++i) {
    c[i] = Fp2(Fp::from_hex(kReducedPairingOfGenerators[i][0]),
               Fp::from_hex(kReducedPairingOfGenerators[i][1]));
  }
  const Fp12 reduced = Fp12::from_w_coefficients(c).conjugate();
  const Gt e = pairing(G1Point::generator(), G2Point::generator());
  EXPECT_EQ(e.value(), reduced * reduced * reduced);
}

TEST(PairingTest, FinalExpMatchesPlainExponentiation) {
  oracle::Sampler rng(201);
  const Fp12 f = oracle::random_fp12(rng);
  const mpz_class& p = oracle::p();
  mpz_class p12 = 1;
  for (int i = 0; i < 12; ++i) p12 *= p;
  const mpz_class e = 3 * (p12 - 1) / oracle::q();
  EXPECT_EQ(oracle::to_z12(final_exp(f).value()),
            oracle::pow(oracle::to_z12(f), e));
}

TEST(PairingTest, IdentityInputs) {
  const G1Point& p = G1Point::generator();
  const G2Point& q = G2Point::generator();
  EXPECT_TRUE(miller_loop(G1Point(), q).is_one());
  EXPECT_TRUE(miller_loop(p, G2Point()).is_one());
  EXPECT_TRUE(pairing(G1Point(), q).is_one());
  EXPECT_TRUE(pairing(p, G2Point()).is_one());
  EXPECT_TRUE(final_exp(Fp12::one()).is_one());
  EXPECT_THROW(final_exp(Fp12::zero()), DomainError);
  const auto bad = G1Point::from_projective_unchecked(Fp::one(), Fp::one(), Fp::one());
  EXPECT_THROW(pairing(bad, q), DomainError);
}

TEST(PairingTest, BilinearAndNonDegenerate) {
  oracle::Sampler rng(203);
  const G1Point& p = G1Point::generator();
  const G2Point& q = G2Point::generator();
  const Gt base = pairing(p, q);
  EXPECT_FALSE(base.is_one());
  EXPECT_TRUE(base.in_subgroup());
  for (int i = 0; i < 3; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    const mpz_class ab = to_mpz(a.value()) * to_mpz(b.value()) % oracle::q();
    EXPECT_EQ(pairing(ecsm(a, p), ecsm(b, q)), base.pow(oracle::from_mpz<4>(ab)));
    EXPECT_EQ(final_exp(miller_loop(ecsm(a, p), q)),
              final_exp(miller_loop(p, ecsm(a, q))));
    const G1Point p2 = ecsm(b, p);
    EXPECT_EQ(pairing(ecsm(a, p) + p2, q), pairing(ecsm(a, p), q) * pairing(p2, q));
    EXPECT_TRUE(final_exp(miller_loop(ecsm(a, p), ecsm(b, q))).in_subgroup());
  }
}

TEST(PairingTest, CostsAreNearReferenceFigures) {
  const G1Point& p = G1Point::generator();
  const G2Point& q = G2Point::generator();
  Measurement ml;
  const Fp12 f = miller_loop(p, q);
  const auto ml_cost = ml.delta().m1_equivalent();
  Measurement fe;
  (void)final_exp(f);
  const auto fe_cost = fe.delta().m1_equivalent();
  std::printf("miller loop %llu, final exponentiation %llu, total %llu\n",
              static_cast<unsigned long long>(ml_cost),
              static_cast<unsigned long long>(fe_cost),
              static_cast<unsigned long long>(ml_cost + fe_cost));
  EXPECT_NEAR(static_cast<double>(ml_cost), 7050.0, 0.05 * 7050.0);
  EXPECT_NEAR(static_cast<double>(fe_cost), 8339.0, 0.05 * 8339.0);
  EXPECT_NEAR(static_cast<double>(ml_cost + fe_cost), 15389.0, 0.05 * 15389.0);
}

TEST(PairingTest, CostAndTraceAreInputIndependent) {
  oracle::Sampler rng(207);
  Engine& e = current_engine();
  std::vector<OpKind> reference;
  OpCounter reference_cost;
  for (int i = 0; i < 3; ++i) {
    const G1Point p = i == 2 ? G1Point() : ecsm(random_scalar(rng), G1Point::generator());
    const G2Point q = ecsm(random_scalar(rng), G2Point::generator());
    Measurement m;
    e.start_trace();
    (void)pairing(p, q);
    const auto trace = e.take_trace();
    if (i == 0) {
      reference = trace;
      reference_cost = m.delta();
    }
    EXPECT_EQ(trace, reference);
    EXPECT_EQ(m.delta(), reference_cost);
  }
}

TEST(MultiPairingTest, ModesAgree) {
  oracle::Sampler rng(211);
  std::vector<PairingInput> pairs;
  for (int i = 0; i < 3; ++i) {
    pairs.emplace_back(ecsm(random_scalar(rng), G1Point::generator()),
                       ecsm(random_scalar(rng), G2Point::generator()));
  }
  const Gt naive = multi_pairing(pairs, MultiPairingMode::kNaive);
  EXPECT_EQ(multi_pairing(pairs, MultiPairingMode::kSharedFE), naive);
  EXPECT_EQ(multi_pairing(pairs, MultiPairingMode::kSharedMLFE), naive);
  const std::span<const PairingInput> one(pairs.data(), 1);
  const Gt single = pairing(pairs[0].first, pairs[0].second);
  for (auto mode : {MultiPairingMode::kNaive, MultiPairingMode::kSharedFE,
                    MultiPairingMode::kSharedMLFE}) {
    EXPECT_EQ(multi_pairing(one, mode), single);
  }
  pairs.emplace_back(G1Point(), G2Point::generator());
  EXPECT_EQ(multi_pairing(pairs, MultiPairingMode::kSharedMLFE), naive);
  EXPECT_THROW(multi_pairing({}, MultiPairingMode::kNaive), UsageError);
  EXPECT_EQ(parse_multi_pairing_mode("sharedfe"), MultiPairingMode::kSharedFE);
  EXPECT_THROW(parse_multi_pairing_mode("fast"), UsageError);
}

TEST(MultiPairingTest, SharingSavesWork) {
  oracle::Sampler rng(213);
  std::vector<PairingInput> pairs;
  for (int i = 0; i < 8; ++i) {
    pairs.emplace_back(ecsm(random_scalar(rng), G1Point::generator()),
                       ecsm(random_scalar(rng), G2Point::generator()));
  }
  std::array<std::uint64_t, 3> cost{};
  std::array<Gt, 3> value;
  int i = 0;
  for (auto mode : {MultiPairingMode::kNaive, MultiPairingMode::kSharedFE,
                    MultiPairingMode::kSharedMLFE}) {
    Measurement m;
    value[i] = multi_pairing(pairs, mode);
    cost[i++] = m.delta().m1_equivalent();
  }
  std::printf("n=8: naive %llu, sharedfe %llu, sharedmlfe %llu\n",
              static_cast<unsigned long long>(cost[0]),
              static_cast<unsigned long long>(cost[1]),
              static_cast<unsigned long long>(cost[2]));
  EXPECT_EQ(value[0], value[1]);
  EXPECT_EQ(value[0], value[2]);
  EXPECT_GE(static_cast<double>(cost[0]) / cost[1], 1.8);
  EXPECT_LE(static_cast<double>(cost[2]), 0.75 * cost[1]);
}

TEST(GtTest, BytesRoundTrip) {
  const Gt e = pairing(G1Point::generator(), G2Point::generator());
  EXPECT_EQ(Gt::from_bytes(e.to_bytes()), e);
  auto bad = e.to_bytes();
  bad[100] ^= 1;
  EXPECT_THROW(Gt::from_bytes(bad), DecodeError);
}

}  // namespace
}  // namespace ctbls
