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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctbls/counters.hpp"
#include "ctbls/csprng.hpp"

namespace ctbls::cli {

using nlohmann::json;

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

inline constexpr const char* kCostConvention =
    "m1_equivalent = m1 + s1 + 608*i1 + fq_m + fq_s + 417*fq_i; m1/s1 include "
    "the Fp work inside every Fp2/Fp6/Fp12 operation (so one M2 appears as "
    "three M1), inversion-internal products are only in cios";

inline json counters_json(const OpCounter& c) {
  return {{"m1", c.m1},         {"s1", c.s1},   {"a1", c.a1},
          {"i1", c.i1},         {"m2", c.m2},   {"s2", c.s2},
          {"a2", c.a2},         {"i2", c.i2},   {"fq_m", c.fq_m},
          {"fq_s", c.fq_s},     {"fq_a", c.fq_a}, {"fq_i", c.fq_i},
          {"cios", c.cios},     {"word_mul", c.word_mul},
          {"word_add", c.word_add}, {"m1_equivalent", c.m1_equivalent()}};
}

// The seed given on the command line, or a fresh one from the OS.
inline Csprng make_rng(const std::optional<std::string>& seed_hex) {
  return seed_hex ? Csprng::from_hex(*seed_hex) : Csprng::from_os_entropy();
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);
void print_json(const json& j);

struct SelftestOptions {
  bool inject_fault = false;
  bool table = false;
};
int run_selftest(const SelftestOptions& opts);

struct BenchOptions {
  std::string op;
  unsigned word_size = 64;
  std::optional<std::string> seed;
  std::size_t n = 8;
  std::string mode;
};
int run_bench(const BenchOptions& opts);

struct SweepOptions {
  std::vector<unsigned> word_sizes;
  bool table = false;
};
int run_sweep(const SweepOptions& opts);

int run_keygen(const std::optional<std::string>& seed,
               const std::filesystem::path& sk_out,
               const std::filesystem::path& pk_out);
int run_sign(const std::filesystem::path& sk_in, const std::string& msg,
             const std::filesystem::path& sig_out);
int run_verify(const std::filesystem::path& pk_in, const std::string& msg,
               const std::filesystem::path& sig_in);
int run_aggregate(const std::vector<std::filesystem::path>& sigs,
                  const std::filesystem::path& out);
int run_aggregate_verify(const std::vector<std::filesystem::path>& pks,
                         const std::vector<std::string>& msgs,
                         const std::filesystem::path& sig_in);
int run_vectors();

}  // namespace ctbls::cli
