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

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ctbls/cios.hpp"
#include "ctbls/countermeasures.hpp"
#include "ctbls/ecsm.hpp"
#include "ctbls/endomorphism.hpp"
#include "ctbls/hash_to_curve.hpp"
#include "ctbls/ipe_bench.hpp"
#include "ctbls/jubjub.hpp"
#include "ctbls/pairing.hpp"

namespace ctbls::cli {
namespace {

struct Timed {
  OpCounter counters;
  double wall_us = 0;
};

// One instrumented run of `op` on the current engine.
Timed measure(const std::function<void()>& op) {
  Measurement m;
  const auto start = std::chrono::steady_clock::now();
  op();
  const auto stop = std::chrono::steady_clock::now();
  return {m.delta(),
          std::chrono::duration<double, std::micro>(stop - start).count()};
}

struct Result {
  Result() = default;
  explicit Result(const Timed& t) : run(t) {}

  Timed run;
  std::string mode;
  std::optional<Timed> baseline;
  std::string baseline_op;
};

std::vector<PairingInput> random_pairs(Csprng& rng, std::size_t n) {
  Uncounted quiet;
  std::vector<PairingInput> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(ecsm(rng.random_scalar(), G1Point::generator()),
                       ecsm(rng.random_scalar(), G2Point::generator()));
  }
  return pairs;
}

template <class C>
WeierstrassPoint<C> random_point(Csprng& rng) {
  Uncounted quiet;
  return ecsm(rng.random_nonzero_scalar(), WeierstrassPoint<C>::generator());
}

Result bench_multipairing(Csprng& rng, std::size_t n, const std::string& mode_name) {
  if (n == 0) throw UsageError("multipairing needs n >= 1");
  const MultiPairingMode mode =
      parse_multi_pairing_mode(mode_name.empty() ? "sharedmlfe" : mode_name);
  const auto pairs = random_pairs(rng, n);
  Result r;
  r.mode = to_string(mode);
  r.run = measure([&] { (void)multi_pairing(pairs, mode); });
  r.baseline = measure([&] { (void)multi_pairing(pairs, MultiPairingMode::kNaive); });
  r.baseline_op = "multipairing:" + std::to_string(n) + ":naive";
  return r;
}

template <class C>
Result bench_hardened_ecsm(Csprng& rng) {
  const Scalar k = rng.random_scalar();
  const auto p = random_point<C>(rng);
  auto config = CountermeasureConfig::all(rng.fork());
  Result r;
  r.mode = "projective+split";
  r.run = measure([&] { (void)hardened_ecsm(k, p, config); });
  r.baseline = measure([&] { (void)ecsm(k, p); });
  r.baseline_op = std::string("ecsm-") + (std::is_same_v<C, G1Curve> ? "g1" : "g2");
  return r;
}

using BenchFn = std::function<Result(Csprng&, const BenchOptions&)>;

const std::map<std::string, BenchFn>& bench_table() {
  static const std::map<std::string, BenchFn> table = {
      {"mul-fp",
       [](Csprng& rng, const BenchOptions&) {
         const Fp a = rng.random_field_element<Fp>(), b = rng.random_field_element<Fp>();
         return Result{measure([&] { (void)(a * b); })};
       }},
      {"inv-fp",
       [](Csprng& rng, const BenchOptions&) {
         const Fp a = rng.random_nonzero_field_element<Fp>();
         return Result{measure([&] { (void)a.inverse(); })};
       }},
      {"inv-fq",
       [](Csprng& rng, const BenchOptions&) {
         const Fq a = rng.random_nonzero_field_element<Fq>();
         return Result{measure([&] { (void)a.inverse(); })};
       }},
      {"miller",
       [](Csprng& rng, const BenchOptions&) {
         const auto pairs = random_pairs(rng, 1);
         return Result{measure(
             [&] { (void)miller_loop(pairs[0].first, pairs[0].second); })};
       }},
      {"finalexp",
       [](Csprng& rng, const BenchOptions&) {
         const auto pairs = random_pairs(rng, 1);
         Fp12 f;
         {
           Uncounted quiet;
           f = miller_loop(pairs[0].first, pairs[0].second);
         }
         return Result{measure([&] { (void)final_exp(f); })};
       }},
      {"pairing",
       [](Csprng& rng, const BenchOptions&) {
         const auto pairs = random_pairs(rng, 1);
         return Result{
             measure([&] { (void)pairing(pairs[0].first, pairs[0].second); })};
       }},
      {"ecsm-g1",
       [](Csprng& rng, const BenchOptions&) {
         const Scalar k = rng.random_scalar();
         const auto p = random_point<G1Curve>(rng);
         return Result{measure([&] { (void)ecsm(k, p); })};
       }},
      {"ecsm-g2",
       [](Csprng& rng, const BenchOptions&) {
         const Scalar k = rng.random_scalar();
         const auto p = random_point<G2Curve>(rng);
         return Result{measure([&] { (void)ecsm(k, p); })};
       }},
      {"ecsm-g2-split",
       [](Csprng& rng, const BenchOptions&) {
         const Scalar k = rng.random_scalar();
         const auto p = random_point<G2Curve>(rng);
         Result r;
         r.mode = "split";
         r.run = measure([&] { (void)ecsm_split(k, p); });
         r.baseline = measure([&] { (void)ecsm(k, p); });
         r.baseline_op = "ecsm-g2";
         return r;
       }},
      {"ecsm-jubjub",
       [](Csprng& rng, const BenchOptions&) {
         const auto k = mod(rng.random_scalar().value(), Jubjub::kOrder);
         return Result{
             measure([&] { (void)jubjub_ecsm(k, JubjubPoint::generator()); })};
       }},
      {"hash-g1",
       [](Csprng& rng, const BenchOptions&) {
         std::array<std::uint8_t, 32> msg;
         rng.fill(msg);
         const DomainSeparationTag dst("CTBLS-BENCH");
         return Result{measure([&] { (void)hash_to_g1(msg, dst); })};
       }},
      {"multipairing",
       [](Csprng& rng, const BenchOptions& o) {
         return bench_multipairing(rng, o.n, o.mode);
       }},
      {"hardened-ecsm-g1",
       [](Csprng& rng, const BenchOptions&) { return bench_hardened_ecsm<G1Curve>(rng); }},
      {"hardened-ecsm-g2",
       [](Csprng& rng, const BenchOptions&) { return bench_hardened_ecsm<G2Curve>(rng); }},
      {"hardened-pairing",
       [](Csprng& rng, const BenchOptions&) {
         const auto pairs = random_pairs(rng, 1);
         auto config = CountermeasureConfig::all(rng.fork());
         Result r;
         r.mode = "randomized";
         r.run = measure([&] {
           (void)hardened_pairing(pairs[0].first, pairs[0].second, config);
         });
         r.baseline =
             measure([&] { (void)pairing(pairs[0].first, pairs[0].second); });
         r.baseline_op = "pairing";
         return r;
       }},
      {"ipe",
       [](Csprng& rng, const BenchOptions& o) {
         Result r;
         r.mode = "split";
         std::optional<IpeBenchReport> report;
         const Timed both = measure([&] { report = ipe_encrypt_benchmark(o.n, rng); });
         r.run = {report->split, both.wall_us};
         r.baseline = Timed{report->plain, 0};
         r.baseline_op = "ipe:" + std::to_string(o.n) + ":plain";
         return r;
       }},
  };
  return table;
}

std::string op_list() {
  std::string s;
  for (const auto& [name, fn] : bench_table()) s += (s.empty() ? "" : ", ") + name;
  return s + " (multipairing also as multipairing:N:MODE)";
}

}  // namespace

int run_bench(const BenchOptions& in) {
  BenchOptions opts = in;
  // multipairing:N:MODE shorthand.
  if (opts.op.rfind("multipairing:", 0) == 0) {
    const std::string rest = opts.op.substr(13);
    const auto colon = rest.find(':');
    try {
      opts.n = std::stoul(rest.substr(0, colon));
    } catch (const std::exception&) {
      throw UsageError("bad multipairing size in '" + opts.op + "'");
    }
    if (colon != std::string::npos) opts.mode = rest.substr(colon + 1);
    opts.op = "multipairing";
  }
  const auto it = bench_table().find(opts.op);
  if (it == bench_table().end()) {
    throw UsageError("unknown op '" + opts.op + "'; available: " + op_list());
  }
  Engine engine(opts.word_size);
  EngineScope scope(engine);
  Csprng rng = make_rng(opts.seed);
  const std::string seed = rng.seed_hex();
  const Result r = it->second(rng, opts);

  json report = counters_json(r.run.counters);
  report["op"] = opts.op;
  report["mode"] = r.mode.empty() ? "default" : r.mode;
  if (opts.op == "multipairing" || opts.op == "ipe") report["n"] = opts.n;
  report["word_size"] = opts.word_size;
  report["seed"] = seed;
  report["wall_time_us"] = r.run.wall_us;
  report["convention"] = kCostConvention;
  if (r.baseline) {
    const auto base = r.baseline->counters.m1_equivalent();
    report["baseline_op"] = r.baseline_op;
    report["baseline_m1_equivalent"] = base;
    report["ratio"] = static_cast<double>(r.run.counters.m1_equivalent()) / base;
  } else {
    report["ratio"] = nullptr;
  }
  print_json(report);
  return kExitOk;
}

int run_sweep(const SweepOptions& opts) {
  std::vector<unsigned> sizes = opts.word_sizes;
  if (sizes.empty()) sizes.assign(kProfiledWordSizes.begin(), kProfiledWordSizes.end());
  for (unsigned w : sizes) (void)cios_cost_model(w);  // validates

  // Montgomery multiplications in one pairing, inversions included.
  std::uint64_t pairing_modmuls = 0;
  {
    Engine engine;
    EngineScope scope(engine);
    const G1Point& p = G1Point::generator();
    const G2Point& q = G2Point::generator();
    (void)p.is_on_curve();  // keep lazy statics out of the count
    (void)q.is_on_curve();
    Measurement m;
    (void)pairing(p, q);
    pairing_modmuls = m.delta().cios;
  }
  const Fp a = Fp::from_u64(3), b = Fp::from_u64(5);
  if (opts.table) {
    std::printf("%4s %3s %10s %10s %8s %14s %14s\n", "w", "s", "word_mul",
                "word_add", "source", "pairing_mul", "pairing_add");
  }
  for (unsigned w : sizes) {
    const CiosCost model = cios_cost_model(w);
    json row = {{"word_size", w},
                {"words", model.words},
                {"word_mul_per_modmul", model.word_muls},
                {"word_add_per_modmul", model.word_adds},
                {"pairing_modmuls", pairing_modmuls},
                {"pairing_word_mul", pairing_modmuls * model.word_muls},
                {"pairing_word_add", pairing_modmuls * model.word_adds}};
    const bool executable = is_executable_word_size(w);
    row["source"] = executable ? "measured" : "analytic";
    if (executable) {
      Engine engine(w);
      EngineScope scope(engine);
      (void)(a * b);
      const OpCounter c = engine.counters();
      row["measured_word_mul"] = c.word_mul;
      row["measured_word_add"] = c.word_add;
      if (c.word_mul != model.word_muls || c.word_add != model.word_adds) {
        row["mismatch"] = true;
        print_json(row);
        return kExitInvariant;
      }
    }
    if (opts.table) {
      std::printf("%4u %3u %10llu %10llu %8s %14llu %14llu\n", w, model.words,
                  static_cast<unsigned long long>(model.word_muls),
                  static_cast<unsigned long long>(model.word_adds),
                  executable ? "measured" : "analytic",
                  static_cast<unsigned long long>(pairing_modmuls * model.word_muls),
                  static_cast<unsigned long long>(pairing_modmuls * model.word_adds));
    } else {
      print_json(row);
    }
  }
  return kExitOk;
}

}  // namespace ctbls::cli
