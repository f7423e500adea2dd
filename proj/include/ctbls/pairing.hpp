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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctbls/errors.hpp"
#include "ctbls/fp12.hpp"
#include "ctbls/weierstrass.hpp"

namespace ctbls {

// Element of the order-q subgroup of Fp12*, where pairing values live.
class Gt {
 public:
  static constexpr std::size_t kBytes = Fp12::kBytes;

  Gt() : v_(Fp12::one()) {}

  static Gt one() { return Gt(); }
  // Wraps a value already known to be in the subgroup.
  static Gt from_fp12_unchecked(const Fp12& v) { return Gt(v); }

  // Throws DecodeError unless the value has order dividing q.
  static Gt from_bytes(std::span<const std::uint8_t> bytes) {
    const Gt g(Fp12::from_bytes(bytes));
    if (!g.in_subgroup()) {
      throw DecodeError(DecodeErrorKind::kNotInSubgroup, "GT element of wrong order");
    }
    return g;
  }

  const Fp12& value() const { return v_; }
  Fp12::Bytes to_bytes() const { return v_.to_bytes(); }

  friend Gt operator*(const Gt& a, const Gt& b) { return Gt(a.v_ * b.v_); }
  Gt& operator*=(const Gt& b) { return *this = *this * b; }

  // Conjugation inverts on the cyclotomic subgroup.
  Gt inverse() const { return Gt(v_.conjugate()); }

  template <std::size_t N>
  Gt pow(const UInt<N>& e) const {
    return Gt(v_.pow(e));
  }

  bool in_subgroup() const {
    Uncounted quiet;
    return !v_.is_zero() && v_.pow(FqParams::kModulus).is_one();
  }

  bool is_one() const { return v_.is_one(); }
  friend bool operator==(const Gt& a, const Gt& b) { return a.v_ == b.v_; }

 private:
  explicit Gt(const Fp12& v) : v_(v) {}
  Fp12 v_;
};

namespace detail {

// Running point T of the Miller loop in Jacobian coordinates over Fp2.
struct G2Jacobian {
  Fp2 x, y, z;
};

// Line through T (tangent or chord) evaluated at P, before scaling by P's
// coordinates: f *= c2 + (c1 xP) w + (c0 yP) w^4.
struct LineCoefficients {
  Fp2 c0, c1, c2;
};

// Doubling step with line, 3 M2 + 8 S2.
inline LineCoefficients doubling_step(G2Jacobian& r) {
  const Fp2 tmp0 = r.x.square();
  const Fp2 tmp1 = r.y.square();
  const Fp2 tmp2 = tmp1.square();
  Fp2 tmp3 = (tmp1 + r.x).square() - tmp0 - tmp2;
  tmp3 = tmp3 + tmp3;
  const Fp2 tmp4 = tmp0 + tmp0 + tmp0;
  Fp2 tmp6 = r.x + tmp4;
  const Fp2 tmp5 = tmp4.square();
  const Fp2 zsquared = r.z.square();
  r.x = tmp5 - tmp3 - tmp3;
  r.z = (r.z + r.y).square() - tmp1 - zsquared;
  r.y = (tmp3 - r.x) * tmp4;
  Fp2 t2 = tmp2 + tmp2;
  t2 = t2 + t2;
  t2 = t2 + t2;
  r.y = r.y - t2;
  Fp2 t3 = tmp4 * zsquared;
  t3 = t3 + t3;
  t3 = -t3;
  tmp6 = tmp6.square() - tmp0 - tmp5;
  Fp2 t1 = tmp1 + tmp1;
  t1 = t1 + t1;
  tmp6 = tmp6 - t1;
  Fp2 t0 = r.z * zsquared;
  t0 = t0 + t0;
  return {t0, t3, tmp6};
}

// Addition step T + Q with line, Q affine: 7 M2 + 8 S2.
inline LineCoefficients addition_step(G2Jacobian& r, const Fp2& qx,
                                      const Fp2& qy) {
  const Fp2 zsquared = r.z.square();
  const Fp2 ysquared = qy.square();
  const Fp2 t0 = zsquared * qx;
  const Fp2 t1 = ((qy + r.z).square() - ysquared - zsquared) * zsquared;
  const Fp2 t2 = t0 - r.x;
  const Fp2 t3 = t2.square();
  Fp2 t4 = t3 + t3;
  t4 = t4 + t4;
  const Fp2 t5 = t4 * t2;
  Fp2 t6 = t1 - r.y - r.y;
  Fp2 t9 = t6 * qx;
  const Fp2 t7 = t4 * r.x;
  r.x = t6.square() - t5 - t7 - t7;
  r.z = (r.z + t2).square() - zsquared - t3;
  Fp2 t10 = qy + r.z;
  const Fp2 t8 = (t7 - r.x) * t6;
  Fp2 u0 = r.y * t5;
  u0 = u0 + u0;
  r.y = t8 - u0;
  t10 = t10.square() - ysquared;
  const Fp2 ztsquared = r.z.square();
  t10 = t10 - ztsquared;
  t9 = t9 + t9 - t10;
  t10 = r.z + r.z;
  t6 = -t6;
  const Fp2 t11 = t6 + t6;
  return {t10, t11, t9};
}

// Multiplies the line evaluated at P into f: 4 M1 + 13 M2.
inline Fp12 ell(const Fp12& f, const LineCoefficients& l, const Fp& px,
                const Fp& py) {
  return f.mul_by_014(l.c2, l.c1.mul_by_fp(px), l.c0.mul_by_fp(py));
}

// One (P, Q) term of a Miller loop. Identity inputs are swapped for the
// generators so the arithmetic is identical; `skip` masks their lines out.
struct MillerTerm {
  Fp px, py;
  Fp2 qx, qy;
  std::uint64_t skip = 0;
  G2Jacobian t;
};

inline MillerTerm prepare_term(const G1Point& p, const G2Point& q) {
  {
    Uncounted quiet;
    if (!p.is_on_curve()) throw DomainError("pairing: G1 input not on curve");
    if (!q.is_on_curve()) throw DomainError("pairing: G2 input not on curve");
  }
  const G1Point pa0 = p.is_normalized() ? p : p.normalize();
  const G2Point qa0 = q.is_normalized() ? q : q.normalize();
  const std::uint64_t skip = pa0.identity_mask() | qa0.identity_mask();
  const G1Point pa =
      G1Point::select(pa0.identity_mask(), G1Point::generator(), pa0);
  const G2Point qa =
      G2Point::select(qa0.identity_mask(), G2Point::generator(), qa0);
  MillerTerm m;
  m.px = pa.x();
  m.py = pa.y();
  m.qx = qa.x();
  m.qy = qa.y();
  m.skip = skip;
  m.t = G2Jacobian{qa.x(), qa.y(), Fp2::one()};
  return m;
}

// Shared-accumulator Miller loop over |u|: one squaring of f per
// iteration, then every term's line. Negative u is one final conjugation.
inline Fp12 miller_loop_terms(std::vector<MillerTerm>& terms) {
  Fp12 f = Fp12::one();
  for (std::size_t i = 63; i-- > 0;) {
    f = f.square();
    for (auto& m : terms) {
      const LineCoefficients l = doubling_step(m.t);
      f = Fp12::select(m.skip, f, ell(f, l, m.px, m.py));
    }
    if (((kBlsX >> i) & 1) != 0) {
      for (auto& m : terms) {
        const LineCoefficients l = addition_step(m.t, m.qx, m.qy);
        f = Fp12::select(m.skip, f, ell(f, l, m.px, m.py));
      }
    }
  }
  if (kBlsXIsNegative) f = f.conjugate();
  return f;
}

// a^u on the cyclotomic subgroup: 63 cyclotomic squarings, 5 products and a
// conjugation for the sign of u.
inline Fp12 cyclotomic_exp_by_u(const Fp12& a) {
  Fp12 r = a;
  for (std::size_t i = 63; i-- > 0;) {
    r = r.cyclotomic_square();
    if (((kBlsX >> i) & 1) != 0) r = r * a;
  }
  return kBlsXIsNegative ? r.conjugate() : r;
}

}  // namespace detail

inline Fp12 miller_loop(const G1Point& p, const G2Point& q) {
  std::vector<detail::MillerTerm> terms{detail::prepare_term(p, q)};
  return detail::miller_loop_terms(terms);
}

// f^(3 (p^12 - 1) / q). Easy part f^((p^6 - 1)(p^2 + 1)), then the hard part
// via 3(p^4 - p^2 + 1)/q = (u - 1)^2 (u + p)(u^2 + p^2 - 1) + 3, so the
// result is the cube of the reduced pairing. Still bilinear and
// non-degenerate because 3 does not divide q.
inline Gt final_exp(const Fp12& f) {
  if (f.is_zero()) throw DomainError("final exponentiation of zero");
  using detail::cyclotomic_exp_by_u;
  Fp12 t = f.conjugate() * f.inverse_or_zero();
  const Fp12 m = t.frobenius(2) * t;

  Fp12 a = cyclotomic_exp_by_u(m) * m.conjugate();   // m^(u-1)
  a = cyclotomic_exp_by_u(a) * a.conjugate();        // m^((u-1)^2)
  const Fp12 b = cyclotomic_exp_by_u(a) * a.frobenius(1);  // a^(u+p)
  const Fp12 c = cyclotomic_exp_by_u(cyclotomic_exp_by_u(b)) * b.frobenius(2) *
                 b.conjugate();  // b^(u^2+p^2-1)
  return Gt::from_fp12_unchecked(c * m.cyclotomic_square() * m);
}

inline Gt pairing(const G1Point& p, const G2Point& q) {
  return final_exp(miller_loop(p, q));
}

enum class MultiPairingMode { kNaive, kSharedFE, kSharedMLFE };

inline const char* to_string(MultiPairingMode mode) {
  switch (mode) {
    case MultiPairingMode::kNaive:
      return "naive";
    case MultiPairingMode::kSharedFE:
      return "sharedfe";
    case MultiPairingMode::kSharedMLFE:
      return "sharedmlfe";
  }
  return "unknown";
}

inline MultiPairingMode parse_multi_pairing_mode(std::string_view s) {
  if (s == "naive") return MultiPairingMode::kNaive;
  if (s == "sharedfe") return MultiPairingMode::kSharedFE;
  if (s == "sharedmlfe") return MultiPairingMode::kSharedMLFE;
  throw UsageError("mode must be naive, sharedfe or sharedmlfe");
}

using PairingInput = std::pair<G1Point, G2Point>;

// Product of e(P_j, Q_j). Naive runs n full pairings; SharedFE runs n Miller
// loops and one final exponentiation; SharedMLFE also shares the Miller
// accumulator, so f is squared once per iteration for all pairs.
inline Gt multi_pairing(std::span<const PairingInput> pairs,
                        MultiPairingMode mode) {
  if (pairs.empty()) throw UsageError("multi_pairing needs at least one pair");
  switch (mode) {
    case MultiPairingMode::kNaive: {
      Gt acc = pairing(pairs[0].first, pairs[0].second);
      for (std::size_t j = 1; j < pairs.size(); ++j) {
        acc *= pairing(pairs[j].first, pairs[j].second);
      }
      return acc;
    }
    case MultiPairingMode::kSharedFE: {
      Fp12 f = miller_loop(pairs[0].first, pairs[0].second);
      for (std::size_t j = 1; j < pairs.size(); ++j) {
        f *= miller_loop(pairs[j].first, pairs[j].second);
      }
      return final_exp(f);
    }
    case MultiPairingMode::kSharedMLFE: {
      std::vector<detail::MillerTerm> terms;
      terms.reserve(pairs.size());
      for (const auto& [p, q] : pairs) terms.push_back(detail::prepare_term(p, q));
      return final_exp(detail::miller_loop_terms(terms));
    }
  }
  throw UsageError("unknown multi-pairing mode");
}

}  // namespace ctbls
