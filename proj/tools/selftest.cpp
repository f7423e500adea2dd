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

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ctbls/bls.hpp"
#include "ctbls/cios.hpp"
#include "ctbls/ecsm.hpp"
#include "ctbls/hash_to_curve.hpp"
#include "ctbls/jubjub.hpp"
#include "ctbls/pairing.hpp"

namespace ctbls::cli {
namespace {

// A suite fills `detail` and returns whether every check held.
using Suite = std::function<bool(Csprng&, json& detail)>;

template <class F>
bool field_matches_reference(Csprng& rng, int count) {
  for (int i = 0; i < count; ++i) {
    const F a = rng.random_field_element<F>();
    const F b = rng.random_field_element<F>();
    const auto want = mul_mod(a.to_uint(), b.to_uint(), F::modulus());
    if ((a * b).to_uint() != want) return false;
  }
  return true;
}

template <class F>
bool inverse_matches_reference(Csprng& rng, int count) {
  for (int i = 0; i < count; ++i) {
    const F a = rng.random_nonzero_field_element<F>();
    const auto prod = mul_mod(a.to_uint(), a.inverse().to_uint(), F::modulus());
    if (prod != decltype(prod)(1)) return false;
  }
  return true;
}

bool suite_inversion_counts(Csprng& rng, json& d) {
  const Fp a = rng.random_nonzero_field_element<Fp>();
  const Fq b = rng.random_nonzero_field_element<Fq>();
  Measurement mp;
  (void)a.inverse();
  const auto fp = mp.delta().cios;
  Measurement mq;
  (void)b.inverse();
  const auto fq = mq.delta().cios;
  d["fp_inversion_muls"] = fp;
  d["fq_inversion_muls"] = fq;
  return fp == kFpInversionMuls && fq == kFqInversionMuls;
}

bool suite_cios_law(Csprng& rng, json& d) {
  bool ok = true;
  const Fp a = rng.random_field_element<Fp>();
  const Fq b = rng.random_field_element<Fq>();
  for (unsigned w : {16u, 32u, 64u}) {
    Engine engine(w);
    EngineScope scope(engine);
    (void)(a * a);
    const OpCounter fp = engine.counters();
    engine.reset_counters();
    (void)(b * b);
    const OpCounter fq = engine.counters();
    const CiosCost want_p = cios_cost_model(w, FpParams::kDatapathBits);
    const CiosCost want_q = cios_cost_model(w, FqParams::kDatapathBits);
    d["w" + std::to_string(w)] = {{"fp_word_mul", fp.word_mul},
                                  {"fp_word_add", fp.word_add},
                                  {"fq_word_mul", fq.word_mul},
                                  {"fq_word_add", fq.word_add}};
    ok = ok && fp.word_mul == want_p.word_muls && fp.word_add == want_p.word_adds &&
         fq.word_mul == want_q.word_muls && fq.word_add == want_q.word_adds;
  }
  return ok;
}

bool suite_field_oracle(Csprng& rng, json& d) {
  const bool mul = field_matches_reference<Fp>(rng, 1000) &&
                   field_matches_reference<Fq>(rng, 1000);
  const bool inv = inverse_matches_reference<Fp>(rng, 100) &&
                   inverse_matches_reference<Fq>(rng, 100);
  d["multiplications"] = mul;
  d["inversions"] = inv;
  return mul && inv;
}

template <class C>
bool group_laws(Csprng& rng) {
  using Point = WeierstrassPoint<C>;
  const Point& g = Point::generator();
  const Scalar a = rng.random_scalar(), b = rng.random_scalar();
  const Point p = ecsm(a, g), q = ecsm(b, g), r = ecsm(rng.random_scalar(), g);
  const Scalar sum = Scalar::from_uint(add_mod(a.value(), b.value(), FqParams::kModulus));
  return p + q == q + p && (p + q) + r == p + (q + r) && p + Point() == p &&
         (p - p).is_identity() && p.dbl() == p + p && ecsm(sum, g) == p + q &&
         g.in_subgroup() && p.is_on_curve();
}

bool suite_group_laws(Csprng& rng, json& d) {
  const bool g1 = group_laws<G1Curve>(rng);
  const bool g2 = group_laws<G2Curve>(rng);
  const JubjubPoint& j = JubjubPoint::generator();
  const bool jj = (j + j) == j.dbl() && j.in_subgroup();
  d["g1"] = g1;
  d["g2"] = g2;
  d["jubjub"] = jj;
  return g1 && g2 && jj;
}

bool suite_bilinearity(Csprng& rng, json& d) {
  const G1Point& p = G1Point::generator();
  const G2Point& q = G2Point::generator();
  const Gt base = pairing(p, q);
  bool ok = !base.is_one() && base.pow(FqParams::kModulus).is_one();
  for (int i = 0; i < 3 && ok; ++i) {
    const Scalar a = rng.random_scalar(), b = rng.random_scalar();
    const auto ab = mul_mod(a.value(), b.value(), FqParams::kModulus);
    ok = pairing(ecsm(a, p), ecsm(b, q)) == base.pow(ab);
  }
  d["checked"] = ok;
  return ok;
}

bool suite_multipairing_modes(Csprng& rng, json& d) {
  std::vector<PairingInput> pairs;
  for (int i = 0; i < 3; ++i) {
    pairs.emplace_back(ecsm(rng.random_scalar(), G1Point::generator()),
                       ecsm(rng.random_scalar(), G2Point::generator()));
  }
  const Gt naive = multi_pairing(pairs, MultiPairingMode::kNaive);
  const bool ok = multi_pairing(pairs, MultiPairingMode::kSharedFE) == naive &&
                  multi_pairing(pairs, MultiPairingMode::kSharedMLFE) == naive;
  d["agree"] = ok;
  return ok;
}

bool suite_exact_counts(Csprng& rng, json& d) {
  const Scalar k = rng.random_scalar();
  Measurement g1;
  (void)ecsm(k, G1Point::generator());
  const OpCounter c1 = g1.delta();
  Measurement g2;
  (void)ecsm(k, G2Point::generator());
  const OpCounter c2 = g2.delta();
  Measurement jj;
  (void)jubjub_ecsm(mod(k.value(), Jubjub::kOrder), JubjubPoint::generator());
  const OpCounter cj = jj.delta();
  d["g1"] = {{"m1", c1.m1 + c1.s1}, {"a1", c1.a1}, {"i1", c1.i1}};
  d["g2"] = {{"m2", c2.m2}, {"s2", c2.s2}, {"i2", c2.i2}};
  d["jubjub_fq_mults"] = cj.fq_mults();
  return c1.m1 + c1.s1 == 4847 && c1.a1 == 14025 && c1.i1 == 1 &&
         c2.m2 == 4337 && c2.s2 == 510 && c2.i2 == 1 &&
         cj.fq_mults() == 252 * 19 + 2;
}

bool suite_hash_to_curve(Csprng&, json& d) {
  const DomainSeparationTag dst("QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_");
  const auto [x, y] = hash_to_g1("abc", dst).to_affine();
  const bool ok =
      x.to_hex() ==
          "03567bc5ef9c690c2ab2ecdf6a96ef1c139cc0b2f284dca0a9a7943388a49a3aee664ba5379a7655d3c68900be2f6903" &&
      y.to_hex() ==
          "0b9c15f3fe6e5cf4211f346271d7b01c8f3b28be689c8429c85b67af215533311f0b8dfaaa154fa6b88176c229f2885d";
  d["known_answer"] = ok;
  return ok;
}

bool suite_signatures(Csprng& rng, json& d) {
  const bls::SecretKey sk = bls::keygen(rng);
  const bls::PublicKey pk = bls::public_key(sk);
  const bls::Signature sig = bls::sign(sk, bls::as_message("selftest"));
  const bool good = bls::verify(pk, bls::as_message("selftest"), sig);
  const bool bad = bls::verify(pk, bls::as_message("selftesu"), sig);
  d["honest"] = good;
  d["tampered_rejected"] = !bad;
  return good && !bad;
}

}  // namespace

int run_selftest(const SelftestOptions& opts) {
  const std::vector<std::pair<const char*, Suite>> suites = {
      {"inversion-counts", suite_inversion_counts},
      {"cios-word-law", suite_cios_law},
      {"field-oracle", suite_field_oracle},
      {"group-laws", suite_group_laws},
      {"bilinearity", suite_bilinearity},
      {"multipairing-modes", suite_multipairing_modes},
      {"exact-counts", suite_exact_counts},
      {"hash-to-curve", suite_hash_to_curve},
      {"signatures", suite_signatures},
  };
  Engine engine;
  EngineScope scope(engine);
  engine.set_fault_injection(opts.inject_fault);
  Csprng rng(Csprng::Seed{});
  std::vector<std::string> failed;
  for (const auto& [name, suite] : suites) {
    json detail = json::object();
    bool pass = false;
    try {
      pass = suite(rng, detail);
    } catch (const std::exception& e) {
      detail["error"] = e.what();
    }
    if (!pass) failed.emplace_back(name);
    if (opts.table) {
      std::printf("%-20s %s\n", name, pass ? "PASS" : "FAIL");
    } else {
      print_json({{"suite", name}, {"pass", pass}, {"detail", detail}});
    }
  }
  if (opts.table) {
    std::printf("%s\n", failed.empty() ? "all suites passed" : "FAILED");
  } else {
    print_json({{"selftest", failed.empty() ? "pass" : "fail"}, {"failed", failed}});
  }
  return failed.empty() ? kExitOk : kExitInvariant;
}

}  // namespace ctbls::cli
