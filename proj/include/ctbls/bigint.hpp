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

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "ctbls/errors.hpp"

namespace ctbls {

// Fixed-width unsigned integer with little-endian 64-bit limbs. This is the
// plain-integer side of the library: moduli, exponents, scalars. Everything
// is constexpr so constants can be parsed at compile time. Nothing here is
// constant-time except the limb-wise add/sub helpers.
template <std::size_t N>
struct UInt {
  static_assert(N > 0);
  static constexpr std::size_t kLimbs = N;
  static constexpr std::size_t kBits = 64 * N;

  std::array<std::uint64_t, N> limb{};

  constexpr UInt() = default;
  constexpr explicit UInt(std::uint64_t v) { limb[0] = v; }

  // Accepts an optional 0x prefix. Throws UsageError on a bad digit or
  // when the value does not fit.
  static constexpr UInt from_hex(std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
      hex.remove_prefix(2);
    }
    if (hex.empty()) throw UsageError("empty hex string");
    UInt out;
    std::size_t bit = 0;
    for (std::size_t i = hex.size(); i-- > 0;) {
      const int d = hex_digit(hex[i]);
      if (d < 0) throw UsageError("invalid hex digit");
      if (d != 0) {
        if (bit >= kBits) throw UsageError("hex value too large");
        out.limb[bit / 64] |= static_cast<std::uint64_t>(d) << (bit % 64);
      }
      bit += 4;
    }
    return out;
  }

  // Big-endian bytes, at most 8*N of them.
  static constexpr UInt from_bytes_be(std::span<const std::uint8_t> bytes) {
    if (bytes.size() > 8 * N) throw UsageError("byte string too long");
    UInt out;
    std::size_t shift = 0;
    for (std::size_t i = bytes.size(); i-- > 0;) {
      out.limb[shift / 64] |= static_cast<std::uint64_t>(bytes[i])
                              << (shift % 64);
      shift += 8;
    }
    return out;
  }

  template <std::size_t Bytes>
  constexpr std::array<std::uint8_t, Bytes> to_bytes_be() const {
    static_assert(Bytes <= 8 * N);
    std::array<std::uint8_t, Bytes> out{};
    for (std::size_t i = 0; i < Bytes; ++i) {
      const std::size_t shift = 8 * i;
      out[Bytes - 1 - i] =
          static_cast<std::uint8_t>(limb[shift / 64] >> (shift % 64));
    }
    return out;
  }

  // Lowercase, no prefix, no leading zeros ("0" for zero).
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    for (std::size_t i = kBits / 4; i-- > 0;) {
      const unsigned d = (limb[i / 16] >> (4 * (i % 16))) & 0xf;
      if (d == 0 && s.empty()) continue;
      s.push_back(kDigits[d]);
    }
    return s.empty() ? "0" : s;
  }

  // Zero-padded to a fixed number of hex digits.
  std::string to_hex_padded(std::size_t digits) const {
    std::string s = to_hex();
    if (s.size() < digits) s.insert(0, digits - s.size(), '0');
    return s;
  }

  constexpr bool bit(std::size_t i) const {
    return i < kBits && ((limb[i / 64] >> (i % 64)) & 1) != 0;
  }
  constexpr void set_bit(std::size_t i) { limb[i / 64] |= 1ull << (i % 64); }

  constexpr std::size_t bit_length() const {
    for (std::size_t i = N; i-- > 0;) {
      if (limb[i] != 0) return 64 * i + std::bit_width(limb[i]);
    }
    return 0;
  }

  constexpr std::size_t popcount() const {
    std::size_t c = 0;
    for (auto l : limb) c += static_cast<std::size_t>(std::popcount(l));
    return c;
  }

  constexpr bool is_zero() const {
    std::uint64_t acc = 0;
    for (auto l : limb) acc |= l;
    return acc == 0;
  }

  constexpr bool is_odd() const { return (limb[0] & 1) != 0; }

  friend constexpr bool operator==(const UInt&, const UInt&) = default;

  friend constexpr std::strong_ordering operator<=>(const UInt& a,
                                                    const UInt& b) {
    for (std::size_t i = N; i-- > 0;) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] <=> b.limb[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  static constexpr int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  }
};

namespace detail {

constexpr std::uint64_t add_carry(std::uint64_t a, std::uint64_t b,
                                  std::uint64_t& carry) {
  const std::uint64_t s = a + b;
  const std::uint64_t c1 = s < a;
  const std::uint64_t r = s + carry;
  const std::uint64_t c2 = r < s;
  carry = c1 | c2;
  return r;
}

constexpr std::uint64_t sub_borrow(std::uint64_t a, std::uint64_t b,
                                   std::uint64_t& borrow) {
  const std::uint64_t d = a - b;
  const std::uint64_t b1 = a < b;
  const std::uint64_t r = d - borrow;
  const std::uint64_t b2 = d < borrow;
  borrow = b1 | b2;
  return r;
}

constexpr std::pair<std::uint64_t, std::uint64_t> mul_64(std::uint64_t a,
                                                         std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return {static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(p >> 64)};
}

}  // namespace detail

// a += b, returns the carry out.
template <std::size_t N>
constexpr std::uint64_t add_in_place(UInt<N>& a, const UInt<N>& b) {
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < N; ++i) {
    a.limb[i] = detail::add_carry(a.limb[i], b.limb[i], carry);
  }
  return carry;
}

// a -= b, returns the borrow out.
template <std::size_t N>
constexpr std::uint64_t sub_in_place(UInt<N>& a, const UInt<N>& b) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    a.limb[i] = detail::sub_borrow(a.limb[i], b.limb[i], borrow);
  }
  return borrow;
}

// Wrapping arithmetic mod 2^(64N).
template <std::size_t N>
constexpr UInt<N> operator+(UInt<N> a, const UInt<N>& b) {
  add_in_place(a, b);
  return a;
}

template <std::size_t N>
constexpr UInt<N> operator-(UInt<N> a, const UInt<N>& b) {
  sub_in_place(a, b);
  return a;
}

template <std::size_t N>
constexpr UInt<N> operator<<(const UInt<N>& a, std::size_t s) {
  UInt<N> out;
  const std::size_t words = s / 64;
  const std::size_t bits = s % 64;
  for (std::size_t i = N; i-- > words;) {
    std::uint64_t v = a.limb[i - words] << bits;
    if (bits != 0 && i - words > 0) v |= a.limb[i - words - 1] >> (64 - bits);
    out.limb[i] = v;
  }
  return out;
}

template <std::size_t N>
constexpr UInt<N> operator>>(const UInt<N>& a, std::size_t s) {
  UInt<N> out;
  const std::size_t words = s / 64;
  const std::size_t bits = s % 64;
  for (std::size_t i = 0; i + words < N; ++i) {
    std::uint64_t v = a.limb[i + words] >> bits;
    if (bits != 0 && i + words + 1 < N) {
      v |= a.limb[i + words + 1] << (64 - bits);
    }
    out.limb[i] = v;
  }
  return out;
}

template <std::size_t N>
constexpr UInt<N> operator&(UInt<N> a, const UInt<N>& b) {
  for (std::size_t i = 0; i < N; ++i) a.limb[i] &= b.limb[i];
  return a;
}

// Widening or truncating copy.
template <std::size_t M, std::size_t N>
constexpr UInt<M> resize(const UInt<N>& a) {
  UInt<M> out;
  for (std::size_t i = 0; i < std::min(M, N); ++i) out.limb[i] = a.limb[i];
  return out;
}

template <std::size_t N, std::size_t M>
constexpr UInt<N + M> mul_wide(const UInt<N>& a, const UInt<M>& b) {
  UInt<N + M> out;
  for (std::size_t i = 0; i < N; ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < M; ++j) {
      auto [lo, hi] = detail::mul_64(a.limb[i], b.limb[j]);
      std::uint64_t c = 0;
      lo = detail::add_carry(lo, out.limb[i + j], c);
      hi += c;
      c = 0;
      lo = detail::add_carry(lo, carry, c);
      hi += c;
      out.limb[i + j] = lo;
      carry = hi;
    }
    out.limb[i + M] = carry;
  }
  return out;
}

// Schoolbook long division, one bit at a time. Variable time; only used on
// public values and in constant setup.
template <std::size_t N, std::size_t M>
constexpr std::pair<UInt<N>, UInt<M>> divmod(const UInt<N>& a,
                                             const UInt<M>& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  UInt<N> quot;
  UInt<M + 1> rem;
  const UInt<M + 1> wide_b = resize<M + 1>(b);
  for (std::size_t i = a.bit_length(); i-- > 0;) {
    rem = rem << 1;
    if (a.bit(i)) rem.limb[0] |= 1;
    if (rem >= wide_b) {
      sub_in_place(rem, wide_b);
      quot.set_bit(i);
    }
  }
  return {quot, resize<M>(rem)};
}

template <std::size_t N, std::size_t M>
constexpr UInt<M> mod(const UInt<N>& a, const UInt<M>& b) {
  return divmod(a, b).second;
}

// (a * b) mod m for a, b < m.
template <std::size_t N>
constexpr UInt<N> mul_mod(const UInt<N>& a, const UInt<N>& b,
                          const UInt<N>& m) {
  return mod(mul_wide(a, b), m);
}

// (a + b) mod m for a, b < m.
template <std::size_t N>
constexpr UInt<N> add_mod(const UInt<N>& a, const UInt<N>& b,
                          const UInt<N>& m) {
  UInt<N> s = a;
  const std::uint64_t carry = add_in_place(s, b);
  if (carry != 0 || s >= m) sub_in_place(s, m);
  return s;
}

// 2^e mod m by repeated doubling.
template <std::size_t N>
constexpr UInt<N> pow2_mod(std::size_t e, const UInt<N>& m) {
  UInt<N> x = mod(UInt<1>(1), m);
  for (std::size_t i = 0; i < e; ++i) x = add_mod(x, x, m);
  return x;
}

}  // namespace ctbls
