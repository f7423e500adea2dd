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

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ctbls/errors.hpp"

namespace {

using ctbls::cli::kExitInvariant;
using ctbls::cli::kExitUsage;

// Exactly one of --msg / --msg-file.
std::string message_from(const std::optional<std::string>& msg,
                         const std::optional<std::string>& file) {
  if (msg.has_value() == file.has_value()) {
    throw ctbls::UsageError("give exactly one of --msg or --msg-file");
  }
  if (msg) return *msg;
  const auto bytes = ctbls::cli::read_file(*file);
  return {bytes.begin(), bytes.end()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ctbls: instrumented BLS12-381 pairing engine"};
  app.require_subcommand(1);

  ctbls::cli::SelftestOptions selftest;
  auto* st = app.add_subcommand("selftest", "Run the invariant suites");
  st->add_flag("--table", selftest.table, "Human-readable output");
  st->add_flag("--json", "JSON output (the default)");
  st->add_flag("--inject-fault", selftest.inject_fault)->group("");

  ctbls::cli::BenchOptions bench;
  auto* bn = app.add_subcommand("bench", "Count the field operations of one op");
  bn->add_option("op", bench.op, "Operation name")->required();
  bn->add_option("--word-size", bench.word_size, "CIOS word size")
      ->check(CLI::IsMember({16u, 32u, 64u}));
  bn->add_option("--seed", bench.seed, "64 hex digits");
  bn->add_option("--n", bench.n, "Multi-pairing size or IPE vector length");
  bn->add_option("--mode", bench.mode, "naive, sharedfe or sharedmlfe");
  bn->add_flag("--json", "JSON output (the default)");

  ctbls::cli::SweepOptions sweep;
  auto* sw = app.add_subcommand("sweep", "Word-level CIOS cost per word size");
  sw->add_option("--word-sizes", sweep.word_sizes, "Subset of 16,24,32,48,64,96")
      ->delimiter(',');
  sw->add_flag("--table", sweep.table, "Human-readable output");
  sw->add_flag("--json", "JSON output (the default)");

  std::optional<std::string> seed, msg, msg_file;
  std::string sk_path, pk_path, sig_path, out_path;
  std::vector<std::string> pk_paths, sig_paths, msgs;

  auto* kg = app.add_subcommand("keygen", "Create a key pair");
  kg->add_option("--seed", seed, "64 hex digits");
  kg->add_option("--sk", sk_path, "Secret key output")->required();
  kg->add_option("--pk", pk_path, "Public key output")->required();

  auto* sg = app.add_subcommand("sign", "Sign a message");
  sg->add_option("--sk", sk_path)->required();
  sg->add_option("--msg", msg);
  sg->add_option("--msg-file", msg_file);
  sg->add_option("--out", out_path)->required();

  auto* vf = app.add_subcommand("verify", "Verify a signature (exit 1 if invalid)");
  vf->add_option("--pk", pk_path)->required();
  vf->add_option("--msg", msg);
  vf->add_option("--msg-file", msg_file);
  vf->add_option("--sig", sig_path)->required();

  auto* ag = app.add_subcommand("aggregate", "Add signatures together");
  ag->add_option("--sig", sig_paths)->required();
  ag->add_option("--out", out_path)->required();

  auto* av = app.add_subcommand("aggregate-verify",
                                "Verify an aggregate over distinct messages");
  av->add_option("--pk", pk_paths)->required();
  av->add_option("--msg", msgs)->required();
  av->add_option("--sig", sig_path)->required();

  auto* vc = app.add_subcommand("vectors", "Print deterministic test vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (st->parsed()) return ctbls::cli::run_selftest(selftest);
    if (bn->parsed()) return ctbls::cli::run_bench(bench);
    if (sw->parsed()) return ctbls::cli::run_sweep(sweep);
    if (kg->parsed()) return ctbls::cli::run_keygen(seed, sk_path, pk_path);
    if (sg->parsed()) {
      return ctbls::cli::run_sign(sk_path, message_from(msg, msg_file), out_path);
    }
    if (vf->parsed()) {
      return ctbls::cli::run_verify(pk_path, message_from(msg, msg_file), sig_path);
    }
    if (ag->parsed()) {
      return ctbls::cli::run_aggregate({sig_paths.begin(), sig_paths.end()}, out_path);
    }
    if (av->parsed()) {
      return ctbls::cli::run_aggregate_verify({pk_paths.begin(), pk_paths.end()},
                                              msgs, sig_path);
    }
    if (vc->parsed()) return ctbls::cli::run_vectors();
  } catch (const ctbls::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const ctbls::DecodeError& e) {
    std::fprintf(stderr, "parse error (%s): %s\n", ctbls::to_string(e.kind()),
                 e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInvariant;
  }
  return kExitUsage;
}
