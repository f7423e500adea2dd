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

#include <array>
#include <cstddef>
#include <cstdint>

#include "ctbls/counters.hpp"
#include "ctbls/errors.hpp"

namespace ctbls {

// Word sizes the cost model knows about. Only 16, 32 and 64 run.
inline constexpr std::array<unsigned, 6> kProfiledWordSizes = {16, 24, 32,
                                                                48, 64, 96};

inline constexpr bool is_profiled_word_size(unsigned w) {
  for (unsigned v : kProfiledWordSizes) {
    if (v == w) return true;
  }
  return false;
}

struct CiosCost {
  unsigned word_bits = 0;
  unsigned words = 0;  // s
  std::uint64_t word_muls = 0;
  std::uint64_t word_adds = 0;
};

// Analytic word-operation count of one CIOS multiplication on a datapath of
// `datapath_bits` (384 for Fp, 256 for Fq): s(2s+1) multiplications and
// 2(2s^2+2s+1) additions with s = ceil(datapath_bits / w).
constexpr CiosCost cios_cost_model(unsigned w, unsigned datapath_bits = 384) {
  if (!is_profiled_word_size(w)) {
    throw UsageError("word size must be one of 16, 24, 32, 48, 64, 96");
  }
  const std::uint64_t s = (datapath_bits + w - 1) / w;
  return CiosCost{w, static_cast<unsigned>(s), s * (2 * s + 1),
                  2 * (2 * s * s + 2 * s + 1)};
}

namespace detail {

template <class W>
struct DoubleWidth;
template <>
struct DoubleWidth<std::uint16_t> {
  using type = std::uint32_t;
};
template <>
struct DoubleWidth<std::uint32_t> {
  using type = std::uint64_t;
};
template <>
struct DoubleWidth<std::uint64_t> {
  using type = unsigned __int128;
};

struct WordTally {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
};

// Montgomery product a*b*2^(-S*w) mod n over S words of type W. Inputs must
// be < n. The tally counts every word multiplication and every word
// addition (a three-operand accumulate counts as two).
template <class W, std::size_t S>
constexpr std::array<W, S> cios(const std::array<W, S>& a,
                                const std::array<W, S>& b,
                                const std::array<W, S>& n, W n0,
                                WordTally& tally) {
  using D = typename DoubleWidth<W>::type;
  constexpr unsigned kW = sizeof(W) * 8;
  std::array<W, S + 2> t{};
  for (std::size_t i = 0; i < S; ++i) {
    W c = 0;
    for (std::size_t j = 0; j < S; ++j) {
      const D uv = D(t[j]) + D(a[j]) * D(b[i]) + D(c);
      t[j] = static_cast<W>(uv);
      c = static_cast<W>(uv >> kW);
    }
    tally.mul += S;
    tally.add += 2 * S;
    D uv = D(t[S]) + D(c);
    t[S] = static_cast<W>(uv);
    t[S + 1] = static_cast<W>(uv >> kW);
    tally.add += 1;

    const W m = static_cast<W>(D(t[0]) * D(n0));
    uv = D(t[0]) + D(m) * D(n[0]);
    c = static_cast<W>(uv >> kW);
    tally.mul += 2;
    tally.add += 1;
    for (std::size_t j = 1; j < S; ++j) {
      uv = D(t[j]) + D(m) * D(n[j]) + D(c);
      t[j - 1] = static_cast<W>(uv);
      c = static_cast<W>(uv >> kW);
    }
    tally.mul += S - 1;
    tally.add += 2 * (S - 1);
    uv = D(t[S]) + D(c);
    t[S - 1] = static_cast<W>(uv);
    c = static_cast<W>(uv >> kW);
    t[S] = static_cast<W>(t[S + 1] + c);
    tally.add += 2;
  }

  // t < 2n here. Subtract n over S+1 words and keep whichever is canonical,
  // by mask rather than by branch.
  std::array<W, S> d{};
  W borrow = 0;
  for (std::size_t j = 0; j < S; ++j) {
    const D diff = D(t[j]) - D(n[j]) - D(borrow);
    d[j] = static_cast<W>(diff);
    borrow = static_cast<W>((diff >> kW) & 1);
  }
  {
    const D diff = D(t[S]) - D(borrow);
    borrow = static_cast<W>((diff >> kW) & 1);
  }
  tally.add += 2 * (S + 1);
  const W keep_t = static_cast<W>(W(0) - borrow);
  std::array<W, S> out{};
  for (std::size_t j = 0; j < S; ++j) {
    out[j] = static_cast<W>((t[j] & keep_t) | (d[j] & static_cast<W>(~keep_t)));
  }
  return out;
}

template <class W, std::size_t L>
constexpr std::array<W, L * 64 / (8 * sizeof(W))> split_limbs(
    const std::array<std::uint64_t, L>& x) {
  constexpr std::size_t kPer = 64 / (8 * sizeof(W));
  std::array<W, L * kPer> out{};
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t k = 0; k < kPer; ++k) {
      out[i * kPer + k] = static_cast<W>(x[i] >> (8 * sizeof(W) * k));
    }
  }
  return out;
}

template <class W, std::size_t L>
constexpr std::array<std::uint64_t, L> join_limbs(
    const std::array<W, L * 64 / (8 * sizeof(W))>& x) {
  constexpr std::size_t kPer = 64 / (8 * sizeof(W));
  std::array<std::uint64_t, L> out{};
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t k = 0; k < kPer; ++k) {
      out[i] |= static_cast<std::uint64_t>(x[i * kPer + k])
                << (8 * sizeof(W) * k);
    }
  }
  return out;
}

template <class W, std::size_t L>
constexpr std::array<std::uint64_t, L> cios_at(
    const std::array<std::uint64_t, L>& a,
    const std::array<std::uint64_t, L>& b,
    const std::array<std::uint64_t, L>& n, std::uint64_t n0,
    WordTally& tally) {
  if constexpr (sizeof(W) == 8) {
    return cios<std::uint64_t, L>(a, b, n, n0, tally);
  } else {
    constexpr std::size_t kS = L * 64 / (8 * sizeof(W));
    return join_limbs<W, L>(cios<W, kS>(split_limbs<W>(a), split_limbs<W>(b),
                                        split_limbs<W>(n),
                                        static_cast<W>(n0), tally));
  }
}

// Word-size dispatch. R = 2^(64L) at every executable word size because
// 16 and 32 divide 64, so Montgomery form does not depend on w.
template <std::size_t L>
constexpr std::array<std::uint64_t, L> cios_dispatch(
    const std::array<std::uint64_t, L>& a,
    const std::array<std::uint64_t, L>& b,
    const std::array<std::uint64_t, L>& n, std::uint64_t n0, unsigned w,
    WordTally& tally) {
  switch (w) {
    case 16:
      return cios_at<std::uint16_t, L>(a, b, n, n0, tally);
    case 32:
      return cios_at<std::uint32_t, L>(a, b, n, n0, tally);
    default:
      return cios_at<std::uint64_t, L>(a, b, n, n0, tally);
  }
}

}  // namespace detail
}  // namespace ctbls
