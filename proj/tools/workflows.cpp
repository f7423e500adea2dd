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
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ctbls/bls.hpp"
#include "ctbls/hash_to_curve.hpp"
#include "ctbls/pairing.hpp"

namespace ctbls::cli {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw UsageError("write failed for " + path.string());
}

void print_json(const json& j) {
  std::printf("%s\n", j.dump().c_str());
  std::fflush(stdout);
}

namespace {

std::string hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 15]);
  }
  return s;
}

// Verification inputs that fail to decode are a failed verification, not a
// usage error, so that a tampered file exits with status 1.
template <class T, class F>
std::optional<T> decode_or_report(const std::filesystem::path& path, F decode) {
  const auto bytes = read_file(path);
  try {
    return decode(bytes);
  } catch (const DecodeError& e) {
    print_json({{"valid", false},
                {"file", path.string()},
                {"error", to_string(e.kind())},
                {"message", e.what()}});
    return std::nullopt;
  }
}

}  // namespace

int run_keygen(const std::optional<std::string>& seed,
               const std::filesystem::path& sk_out,
               const std::filesystem::path& pk_out) {
  Csprng rng = make_rng(seed);
  const bls::SecretKey sk = bls::keygen(rng);
  const bls::PublicKey pk = bls::public_key(sk);
  write_file(sk_out, bls::to_bytes(sk));
  write_file(pk_out, bls::to_bytes(pk));
  print_json({{"seed", rng.seed_hex()}, {"pk", hex(bls::to_bytes(pk))}});
  return kExitOk;
}

int run_sign(const std::filesystem::path& sk_in, const std::string& msg,
             const std::filesystem::path& sig_out) {
  const bls::SecretKey sk = bls::secret_key_from_bytes(read_file(sk_in));
  const bls::Signature sig = bls::sign(sk, bls::as_message(msg));
  write_file(sig_out, bls::to_bytes(sig));
  print_json({{"sig", hex(bls::to_bytes(sig))}});
  return kExitOk;
}

int run_verify(const std::filesystem::path& pk_in, const std::string& msg,
               const std::filesystem::path& sig_in) {
  const auto pk = decode_or_report<bls::PublicKey>(pk_in, [](const auto& b) {
    return bls::public_key_from_bytes(b);
  });
  if (!pk) return kExitVerifyFailed;
  const auto sig = decode_or_report<bls::Signature>(sig_in, [](const auto& b) {
    return bls::signature_from_bytes(b);
  });
  if (!sig) return kExitVerifyFailed;
  const bool ok = bls::verify(*pk, bls::as_message(msg), *sig);
  print_json({{"valid", ok}});
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_aggregate(const std::vector<std::filesystem::path>& sigs,
                  const std::filesystem::path& out) {
  std::vector<bls::Signature> parsed;
  for (const auto& path : sigs) {
    parsed.push_back(bls::signature_from_bytes(read_file(path)));
  }
  const bls::Signature agg = bls::aggregate(parsed);
  write_file(out, bls::to_bytes(agg));
  print_json({{"count", parsed.size()}, {"sig", hex(bls::to_bytes(agg))}});
  return kExitOk;
}

int run_aggregate_verify(const std::vector<std::filesystem::path>& pks,
                         const std::vector<std::string>& msgs,
                         const std::filesystem::path& sig_in) {
  if (pks.size() != msgs.size()) {
    throw UsageError("need one --msg per --pk");
  }
  std::vector<bls::PublicKey> keys;
  for (const auto& path : pks) {
    const auto pk = decode_or_report<bls::PublicKey>(path, [](const auto& b) {
      return bls::public_key_from_bytes(b);
    });
    if (!pk) return kExitVerifyFailed;
    keys.push_back(*pk);
  }
  const auto sig = decode_or_report<bls::Signature>(sig_in, [](const auto& b) {
    return bls::signature_from_bytes(b);
  });
  if (!sig) return kExitVerifyFailed;
  std::vector<bls::Message> views;
  for (const auto& m : msgs) views.push_back(bls::as_message(m));
  const bool ok = bls::aggregate_verify(keys, views, *sig);
  print_json({{"valid", ok}, {"signers", keys.size()}});
  return ok ? kExitOk : kExitVerifyFailed;
}

// Deterministic vectors for other implementations to check against.
int run_vectors() {
  const DomainSeparationTag dst("QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_");
  for (const char* msg : {"", "abc", "abcdef0123456789"}) {
    const auto [x, y] = hash_to_g1(msg, dst).to_affine();
    print_json({{"kind", "hash_to_g1"},
                {"dst", std::string(dst.view())},
                {"msg", msg},
                {"x", x.to_hex()},
                {"y", y.to_hex()}});
  }
  const Gt e = pairing(G1Point::generator(), G2Point::generator());
  print_json({{"kind", "pairing_generators"},
              {"note", "final exponent 3(p^12-1)/q"},
              {"gt", hex(e.to_bytes())}});
  Csprng::Seed seed;
  for (std::size_t i = 0; i < seed.size(); ++i) seed[i] = static_cast<std::uint8_t>(i);
  Csprng rng(seed);
  print_json({{"kind", "csprng"},
              {"seed", rng.seed_hex()},
              {"block0", hex(Csprng(seed).next_block())},
              {"fp0", rng.random_field_element<Fp>().to_hex()},
              {"fq1", rng.random_field_element<Fq>().to_hex()}});
  Csprng keys(seed);
  const bls::SecretKey sk = bls::keygen(keys);
  const bls::PublicKey pk = bls::public_key(sk);
  const bls::Signature sig = bls::sign(sk, bls::as_message("ctbls"));
  print_json({{"kind", "bls_signature"},
              {"dst", std::string(bls::signature_dst().view())},
              {"sk", hex(bls::to_bytes(sk))},
              {"pk", hex(bls::to_bytes(pk))},
              {"msg", "ctbls"},
              {"sig", hex(bls::to_bytes(sig))}});
  return kExitOk;
}

}  // namespace ctbls::cli
