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

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ctbls/errors.hpp"

namespace ctbls {

// Multiplications performed by one Fermat inversion (square-and-multiply on
// modulus - 2). Checked against the exponents in field.hpp.
inline constexpr std::uint64_t kFpInversionMuls = 608;
inline constexpr std::uint64_t kFqInversionMuls = 417;

// Kinds recorded in an operation trace. Only field-level operations are
// traced; anything built on top shows up as its constituent field ops.
enum class OpKind : std::uint8_t {
  kFpMul,
  kFpSqr,
  kFpAdd,
  kFpSub,
  kFpNeg,
  kFpInv,
  kFqMul,
  kFqSqr,
  kFqAdd,
  kFqSub,
  kFqNeg,
  kFqInv,
};

enum class ExtOp : std::uint8_t { kMul, kSqr, kAdd, kInv };

// The cost ledger. Fp tallies are inclusive: an Fp2 product adds one to m2
// and three to m1. Multiplications inside an inversion are not in m1/s1
// (they are what i1 stands for) but do appear in `cios`, which counts every
// Montgomery multiplication actually executed.
struct OpCounter {
  std::uint64_t m1 = 0, s1 = 0, a1 = 0, i1 = 0;
  std::uint64_t m2 = 0, s2 = 0, a2 = 0, i2 = 0;
  std::uint64_t fq_m = 0, fq_s = 0, fq_a = 0, fq_i = 0;
  std::uint64_t cios = 0;
  std::uint64_t word_mul = 0, word_add = 0;

  // Base-field multiplications, squarings counted as multiplications and
  // each inversion as its exponentiation chain. Fq work is weighted 1:1.
  std::uint64_t m1_equivalent() const {
    return m1 + s1 + kFpInversionMuls * i1 + fq_m + fq_s +
           kFqInversionMuls * fq_i;
  }

  // Fq multiplications and squarings, inversions excluded.
  std::uint64_t fq_mults() const { return fq_m + fq_s; }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;

  OpCounter& operator+=(const OpCounter& o) {
    m1 += o.m1, s1 += o.s1, a1 += o.a1, i1 += o.i1;
    m2 += o.m2, s2 += o.s2, a2 += o.a2, i2 += o.i2;
    fq_m += o.fq_m, fq_s += o.fq_s, fq_a += o.fq_a, fq_i += o.fq_i;
    cios += o.cios, word_mul += o.word_mul, word_add += o.word_add;
    return *this;
  }

  friend OpCounter operator-(OpCounter a, const OpCounter& b) {
    a.m1 -= b.m1, a.s1 -= b.s1, a.a1 -= b.a1, a.i1 -= b.i1;
    a.m2 -= b.m2, a.s2 -= b.s2, a.a2 -= b.a2, a.i2 -= b.i2;
    a.fq_m -= b.fq_m, a.fq_s -= b.fq_s, a.fq_a -= b.fq_a, a.fq_i -= b.fq_i;
    a.cios -= b.cios, a.word_mul -= b.word_mul, a.word_add -= b.word_add;
    return a;
  }
};

inline constexpr bool is_executable_word_size(unsigned w) {
  return w == 16 || w == 32 || w == 64;
}

// Arithmetic context: CIOS word size, counters, optional trace and a fault
// hook used by the self-test. One engine per thread; arithmetic picks up the
// engine installed by EngineScope, or a thread-local default.
class Engine {
 public:
  explicit Engine(unsigned word_bits = 64) { set_word_bits(word_bits); }

  unsigned word_bits() const noexcept { return word_bits_; }
  void set_word_bits(unsigned w) {
    if (!is_executable_word_size(w)) {
      throw UsageError("word size must be 16, 32 or 64");
    }
    word_bits_ = w;
  }

  const OpCounter& counters() const noexcept { return counters_; }
  void reset_counters() noexcept { counters_ = OpCounter{}; }

  void start_trace() {
    trace_.clear();
    tracing_ = true;
  }
  std::vector<OpKind> take_trace() {
    tracing_ = false;
    return std::move(trace_);
  }
  bool tracing() const noexcept { return tracing_; }

  // Corrupts the Montgomery constant fed to CIOS. Test hook only.
  void set_fault_injection(bool on) noexcept { fault_ = on; }
  bool fault_injection() const noexcept { return fault_; }

  bool muted() const noexcept { return mute_depth_ > 0; }

  void record(OpKind kind) {
    if (mute_depth_ > 0) return;
    auto& c = counters_;
    switch (kind) {
      case OpKind::kFpMul: ++c.m1; break;
      case OpKind::kFpSqr: ++c.s1; break;
      case OpKind::kFpAdd:
      case OpKind::kFpSub:
      case OpKind::kFpNeg: ++c.a1; break;
      case OpKind::kFpInv: ++c.i1; break;
      case OpKind::kFqMul: ++c.fq_m; break;
      case OpKind::kFqSqr: ++c.fq_s; break;
      case OpKind::kFqAdd:
      case OpKind::kFqSub:
      case OpKind::kFqNeg: ++c.fq_a; break;
      case OpKind::kFqInv: ++c.fq_i; break;
    }
    if (tracing_) trace_.push_back(kind);
  }

  void record_ext(ExtOp op) {
    if (mute_depth_ > 0) return;
    switch (op) {
      case ExtOp::kMul: ++counters_.m2; break;
      case ExtOp::kSqr: ++counters_.s2; break;
      case ExtOp::kAdd: ++counters_.a2; break;
      case ExtOp::kInv: ++counters_.i2; break;
    }
  }

  void record_cios(std::uint64_t word_muls, std::uint64_t word_adds) {
    if (mute_depth_ > 0) return;
    ++counters_.cios;
    counters_.word_mul += word_muls;
    counters_.word_add += word_adds;
  }

  void mute() noexcept { ++mute_depth_; }
  void unmute() noexcept { --mute_depth_; }

 private:
  unsigned word_bits_ = 64;
  OpCounter counters_;
  bool tracing_ = false;
  std::vector<OpKind> trace_;
  bool fault_ = false;
  int mute_depth_ = 0;
};

namespace detail {

inline Engine*& active_engine_slot() {
  static thread_local Engine* slot = nullptr;
  return slot;
}

inline Engine& default_engine() {
  static thread_local Engine engine;
  return engine;
}

}  // namespace detail

inline Engine& current_engine() {
  Engine* e = detail::active_engine_slot();
  return e != nullptr ? *e : detail::default_engine();
}

// Installs an engine for the current thread until the scope ends.
class EngineScope {
 public:
  explicit EngineScope(Engine& engine) : prev_(detail::active_engine_slot()) {
    detail::active_engine_slot() = &engine;
  }
  ~EngineScope() { detail::active_engine_slot() = prev_; }
  EngineScope(const EngineScope&) = delete;
  EngineScope& operator=(const EngineScope&) = delete;

 private:
  Engine* prev_;
};

// Snapshot of the current engine's counters; delta() is the work done since.
class Measurement {
 public:
  Measurement() : engine_(&current_engine()), start_(engine_->counters()) {}
  OpCounter delta() const { return engine_->counters() - start_; }

 private:
  const Engine* engine_;
  OpCounter start_;
};

// Suspends counting and tracing on the current engine. Used for constant
// setup and for validation that is not part of an algorithm's cost.
class Uncounted {
 public:
  Uncounted() : engine_(current_engine()) { engine_.mute(); }
  ~Uncounted() { engine_.unmute(); }
  Uncounted(const Uncounted&) = delete;
  Uncounted& operator=(const Uncounted&) = delete;

 private:
  Engine& engine_;
};

}  // namespace ctbls
