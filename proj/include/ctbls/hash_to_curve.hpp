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
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ctbls/bigint.hpp"
#include "ctbls/errors.hpp"
#include "ctbls/field.hpp"
#include "ctbls/sha256.hpp"
#include "ctbls/weierstrass.hpp"

namespace ctbls {

// A hash-to-curve domain separation tag, at most 255 bytes.
class DomainSeparationTag {
 public:
  explicit DomainSeparationTag(std::string_view tag) : tag_(tag) {
    if (tag_.empty() || tag_.size() > 255) {
      throw UsageError("domain separation tag must be 1..255 bytes");
    }
  }
  std::string_view view() const { return tag_; }
  std::size_t size() const { return tag_.size(); }

 private:
  std::string tag_;
};

// expand_message_xmd with SHA-256.
inline std::vector<std::uint8_t> expand_message_xmd(
    std::span<const std::uint8_t> msg, const DomainSeparationTag& dst,
    std::size_t len_in_bytes) {
  const std::size_t ell = (len_in_bytes + 31) / 32;
  if (ell == 0 || ell > 255 || len_in_bytes > 65535) {
    throw UsageError("requested expansion length out of range");
  }
  const auto dst_len = static_cast<std::uint8_t>(dst.size());
  const std::array<std::uint8_t, 64> z_pad{};

  const Digest b0 = Sha256()
                        .update(z_pad)
                        .update(msg)
                        .update(static_cast<std::uint8_t>(len_in_bytes >> 8))
                        .update(static_cast<std::uint8_t>(len_in_bytes))
                        .update(std::uint8_t{0})
                        .update(dst.view())
                        .update(dst_len)
                        .finish();
  std::vector<std::uint8_t> out;
  out.reserve(32 * ell);
  Digest prev{};
  for (std::size_t i = 1; i <= ell; ++i) {
    Digest in;
    for (std::size_t j = 0; j < 32; ++j) in[j] = b0[j] ^ prev[j];
    prev = Sha256()
               .update(in)
               .update(static_cast<std::uint8_t>(i))
               .update(dst.view())
               .update(dst_len)
               .finish();
    out.insert(out.end(), prev.begin(), prev.end());
  }
  out.resize(len_in_bytes);
  return out;
}

// Two field elements from 64 uniform bytes each (128 bits of slack over p).
inline std::array<Fp, 2> hash_to_field(std::span<const std::uint8_t> msg,
                                       const DomainSeparationTag& dst) {
  const auto bytes = expand_message_xmd(msg, dst, 128);
  std::array<Fp, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto wide =
        UInt<8>::from_bytes_be(std::span(bytes).subspan(64 * i, 64));
    out[i] = Fp::from_uint(mod(wide, FpParams::kModulus));
  }
  return out;
}

namespace detail {

template <std::size_t N>
constexpr std::array<Fp, N> fp_array(const std::array<std::string_view, N>& hex) {
  std::array<Fp, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = Fp::from_hex(hex[i]);
  return out;
}

// y^2 = x^3 + A'x + B', 11-isogenous to the G1 curve.
inline constexpr Fp kIsoA = Fp::from_hex(
    "144698a3b8e9433d693a02c96d4982b0ea985383ee66a8d8e8981aefd881ac98936f8da0e0f97f5cf428082d584c1d");
inline constexpr Fp kIsoB = Fp::from_hex(
    "12e2908d11688030018b12e8753eee3b2016c1f0f24f4070a0b9c14fcef35ef55a23215a316ceaa5d1cc48e98e172be0");
inline constexpr std::uint64_t kSswuZ = 11;
// sqrt(-Z^3); either root works since the sign of y is fixed afterwards.
inline constexpr Fp kSqrtMinusZCubed = Fp::from_hex(
    "3d689d1e0e762cef9f2bec6130316806b4c80eda6fc10ce77ae83eab1ea8b8b8a407c9c6db195e06f2dbeabc2baeff5");

// Isogeny map coefficients, constant term first.
inline constexpr std::array<Fp, 12> kIsoXNum = fp_array<12>({{
    "11a05f2b1e833340b809101dd99815856b303e88a2d7005ff2627b56cdb4e2c85610c2d5f2e62d6eaeac1662734649b7",
    "17294ed3e943ab2f0588bab22147a81c7c17e75b2f6a8417f565e33c70d1e86b4838f2a6f318c356e834eef1b3cb83bb",
    "0d54005db97678ec1d1048c5d10a9a1bce032473295983e56878e501ec68e25c958c3e3d2a09729fe0179f9dac9edcb0",
    "1778e7166fcc6db74e0609d307e55412d7f5e4656a8dbf25f1b33289f1b330835336e25ce3107193c5b388641d9b6861",
    "0e99726a3199f4436642b4b3e4118e5499db995a1257fb3f086eeb65982fac18985a286f301e77c451154ce9ac8895d9",
    "1630c3250d7313ff01d1201bf7a74ab5db3cb17dd952799b9ed3ab9097e68f90a0870d2dcae73d19cd13c1c66f652983",
    "0d6ed6553fe44d296a3726c38ae652bfb11586264f0f8ce19008e218f9c86b2a8da25128c1052ecaddd7f225a139ed84",
    "17b81e7701abdbe2e8743884d1117e53356de5ab275b4db1a682c62ef0f2753339b7c8f8c8f475af9ccb5618e3f0c88e",
    "080d3cf1f9a78fc47b90b33563be990dc43b756ce79f5574a2c596c928c5d1de4fa295f296b74e956d71986a8497e317",
    "169b1f8e1bcfa7c42e0c37515d138f22dd2ecb803a0c5c99676314baf4bb1b7fa3190b2edc0327797f241067be390c9e",
    "10321da079ce07e272d8ec09d2565b0dfa7dccdde6787f96d50af36003b14866f69b771f8c285decca67df3f1605fb7b",
    "06e08c248e260e70bd1e962381edee3d31d79d7e22c837bc23c0bf1bc24c6b68c24b1b80b64d391fa9c8ba2e8ba2d229",
}});
inline constexpr std::array<Fp, 11> kIsoXDen = fp_array<11>({{
    "08ca8d548cff19ae18b2e62f4bd3fa6f01d5ef4ba35b48ba9c9588617fc8ac62b558d681be343df8993cf9fa40d21b1c",
    "12561a5deb559c4348b4711298e536367041e8ca0cf0800c0126c2588c48bf5713daa8846cb026e9e5c8276ec82b3bff",
    "0b2962fe57a3225e8137e629bff2991f6f89416f5a718cd1fca64e00b11aceacd6a3d0967c94fedcfcc239ba5cb83e19",
    "03425581a58ae2fec83aafef7c40eb545b08243f16b1655154cca8abc28d6fd04976d5243eecf5c4130de8938dc62cd8",
    "13a8e162022914a80a6f1d5f43e7a07dffdfc759a12062bb8d6b44e833b306da9bd29ba81f35781d539d395b3532a21e",
    "0e7355f8e4e667b955390f7f0506c6e9395735e9ce9cad4d0a43bcef24b8982f7400d24bc4228f11c02df9a29f6304a5",
    "0772caacf16936190f3e0c63e0596721570f5799af53a1894e2e073062aede9cea73b3538f0de06cec2574496ee84a3a",
    "14a7ac2a9d64a8b230b3f5b074cf01996e7f63c21bca68a81996e1cdf9822c580fa5b9489d11e2d311f7d99bbdcc5a5e",
    "0a10ecf6ada54f825e920b3dafc7a3cce07f8d1d7161366b74100da67f39883503826692abba43704776ec3a79a1d641",
    "095fc13ab9e92ad4476d6e3eb3a56680f682b4ee96f7d03776df533978f31c1593174e4b4b7865002d6384d168ecdd0a",
    "000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001",
}});
inline constexpr std::array<Fp, 16> kIsoYNum = fp_array<16>({{
    "090d97c81ba24ee0259d1f094980dcfa11ad138e48a869522b52af6c956543d3cd0c7aee9b3ba3c2be9845719707bb33",
    "134996a104ee5811d51036d776fb46831223e96c254f383d0f906343eb67ad34d6c56711962fa8bfe097e75a2e41c696",
    "00cc786baa966e66f4a384c86a3b49942552e2d658a31ce2c344be4b91400da7d26d521628b00523b8dfe240c72de1f6",
    "01f86376e8981c217898751ad8746757d42aa7b90eeb791c09e4a3ec03251cf9de405aba9ec61deca6355c77b0e5f4cb",
    "08cc03fdefe0ff135caf4fe2a21529c4195536fbe3ce50b879833fd221351adc2ee7f8dc099040a841b6daecf2e8fedb",
    "16603fca40634b6a2211e11db8f0a6a074a7d0d4afadb7bd76505c3d3ad5544e203f6326c95a807299b23ab13633a5f0",
    "04ab0b9bcfac1bbcb2c977d027796b3ce75bb8ca2be184cb5231413c4d634f3747a87ac2460f415ec961f8855fe9d6f2",
    "0987c8d5333ab86fde9926bd2ca6c674170a05bfe3bdd81ffd038da6c26c842642f64550fedfe935a15e4ca31870fb29",
    "09fc4018bd96684be88c9e221e4da1bb8f3abd16679dc26c1e8b6e6a1f20cabe69d65201c78607a360370e577bdba587",
    "0e1bba7a1186bdb5223abde7ada14a23c42a0ca7915af6fe06985e7ed1e4d43b9b3f7055dd4eba6f2bafaaebca731c30",
    "19713e47937cd1be0dfd0b8f1d43fb93cd2fcbcb6caf493fd1183e416389e61031bf3a5cce3fbafce813711ad011c132",
    "18b46a908f36f6deb918c143fed2edcc523559b8aaf0c2462e6bfe7f911f643249d9cdf41b44d606ce07c8a4d0074d8e",
    "0b182cac101b9399d155096004f53f447aa7b12a3426b08ec02710e807b4633f06c851c1919211f20d4c04f00b971ef8",
    "0245a394ad1eca9b72fc00ae7be315dc757b3b080d4c158013e6632d3c40659cc6cf90ad1c232a6442d9d3f5db980133",
    "05c129645e44cf1102a159f748c4a3fc5e673d81d7e86568d9ab0f5d396a7ce46ba1049b6579afb7866b1e715475224b",
    "15e6be4e990f03ce4ea50b3b42df2eb5cb181d8f84965a3957add4fa95af01b2b665027efec01c7704b456be69c8b604",
}});
inline constexpr std::array<Fp, 16> kIsoYDen = fp_array<16>({{
    "16112c4c3a9c98b252181140fad0eae9601a6de578980be6eec3232b5be72e7a07f3688ef60c206d01479253b03663c1",
    "1962d75c2381201e1a0cbd6c43c348b885c84ff731c4d59ca4a10356f453e01f78a4260763529e3532f6102c2e49a03d",
    "058df3306640da276faaae7d6e8eb15778c4855551ae7f310c35a5dd279cd2eca6757cd636f96f891e2538b53dbf67f2",
    "16b7d288798e5395f20d23bf89edb4d1d115c5dbddbcd30e123da489e726af41727364f2c28297ada8d26d98445f5416",
    "0be0e079545f43e4b00cc912f8228ddcc6d19c9f0f69bbb0542eda0fc9dec916a20b15dc0fd2ededda39142311a5001d",
    "08d9e5297186db2d9fb266eaac783182b70152c65550d881c5ecd87b6f0f5a6449f38db9dfa9cce202c6477faaf9b7ac",
    "166007c08a99db2fc3ba8734ace9824b5eecfdfa8d0cf8ef5dd365bc400a0051d5fa9c01a58b1fb93d1a1399126a775c",
    "16a3ef08be3ea7ea03bcddfabba6ff6ee5a4375efa1f4fd7feb34fd206357132b920f5b00801dee460ee415a15812ed9",
    "1866c8ed336c61231a1be54fd1d74cc4f9fb0ce4c6af5920abc5750c4bf39b4852cfe2f7bb9248836b233d9d55535d4a",
    "167a55cda70a6e1cea820597d94a84903216f763e13d87bb5308592e7ea7d4fbc7385ea3d529b35e346ef48bb8913f55",
    "04d2f259eea405bd48f010a01ad2911d9c6dd039bb61a6290e591b36e636a5c871a5c29f4f83060400f8b49cba8f6aa8",
    "0accbb67481d033ff5852c1e48c50c477f94ff8aefce42d28c0f9a88cea7913516f968986f7ebbea9684b529e2561092",
    "0ad6b9514c767fe3c3613144b45f1496543346d98adf02267d5ceef9a00d9b8693000763e3b90ac11e99b138573345cc",
    "02660400eb2e4f3b628bdd0d53cd76f2bf565b94e72927c1cb748df27942480e420517bd8714cc80d1fadc1326ed06f7",
    "0e0fa1d816ddc03e6b24255e0d7819c171c40f65e273b853324efcd6356caa205ca2f570f13497804415473a1d634b8f",
    "000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001",
}});

// x^e with e = (p - 3) / 4.
inline Fp pow_p_minus_3_over_4(const Fp& x) {
  static constexpr UInt<6> kExp = (FpParams::kModulus - UInt<6>(3)) >> 2;
  return x.pow(kExp);
}

// Homogeneous Horner evaluation: sum k_i n^i d^(deg - i), with d_pows[j]
// holding d^j.
template <std::size_t K>
Fp eval_homogeneous(const std::array<Fp, K>& k, const Fp& n,
                    const std::array<Fp, 16>& d_pows) {
  Fp acc = k[K - 1];
  for (std::size_t i = K - 1; i-- > 0;) {
    acc = acc * n + k[i] * d_pows[K - 1 - i];
  }
  return acc;
}

// Simplified SWU onto the isogenous curve, straight-line form for
// p = 3 mod 4. Returns x as a fraction xn/xd and y in affine form.
struct SswuOutput {
  Fp xn, xd, y;
};

inline SswuOutput map_to_curve_sswu(const Fp& u) {
  static constexpr Fp kZ = Fp::from_u64(kSswuZ);
  static constexpr Fp kMinusA =
      Fp::from_uint(FpParams::kModulus - kIsoA.to_uint());
  const Fp tv1 = u.square();
  const Fp tv3 = kZ * tv1;
  Fp tv2 = tv3.square();
  Fp xd = tv2 + tv3;
  const Fp x1n = (xd + Fp::one()) * kIsoB;
  xd = kMinusA * xd;
  xd = Fp::select(xd.zero_mask(), kZ * kIsoA, xd);
  tv2 = xd.square();
  const Fp gxd = tv2 * xd;
  tv2 = kIsoA * tv2;
  Fp gx1 = (x1n.square() + tv2) * x1n;
  gx1 = gx1 + kIsoB * gxd;
  tv2 = gx1 * gxd;
  const Fp tv4 = gxd.square() * tv2;
  const Fp y1 = pow_p_minus_3_over_4(tv4) * tv2;
  const Fp x2n = tv3 * x1n;
  const Fp y2 = y1 * kSqrtMinusZCubed * tv1 * u;
  const std::uint64_t e2 = Fp::eq_mask(y1.square() * gxd, gx1);
  const Fp xn = Fp::select(e2, x1n, x2n);
  Fp y = Fp::select(e2, y1, y2);
  const std::uint64_t flip = std::uint64_t{0} - std::uint64_t{u.sgn0() != y.sgn0()};
  y = Fp::select(flip, -y, y);
  return {xn, xd, y};
}

// The 11-isogeny back to the G1 curve, in projective coordinates.
inline G1Point iso_map(const SswuOutput& s) {
  std::array<Fp, 16> d_pows;
  d_pows[0] = Fp::one();
  d_pows[1] = s.xd;
  for (std::size_t i = 2; i < 16; ++i) d_pows[i] = d_pows[i - 1] * s.xd;
  const Fp x_num = eval_homogeneous(kIsoXNum, s.xn, d_pows);  // / xd^11
  const Fp x_den = eval_homogeneous(kIsoXDen, s.xn, d_pows);  // / xd^10
  const Fp y_num = eval_homogeneous(kIsoYNum, s.xn, d_pows);  // / xd^15
  const Fp y_den = eval_homogeneous(kIsoYDen, s.xn, d_pows);  // / xd^15
  // x = x_num / (xd x_den), y = y y_num / y_den.
  const Fp xd_x_den = s.xd * x_den;
  const Fp z = xd_x_den * y_den;
  if (z.is_zero()) return G1Point::identity();  // isogeny kernel
  return G1Point::from_projective_unchecked(x_num * y_den,
                                            s.y * y_num * xd_x_den, z);
}

// h_eff = 1 - u clears the G1 cofactor.
inline constexpr UInt<1> kG1EffectiveCofactor = UInt<1>(0xd201000000010001);

}  // namespace detail

// Random-oracle hash to G1 with SHA-256 and simplified SWU on the
// 11-isogenous curve. Messages are public; this is not constant-time.
inline G1Point hash_to_g1(std::span<const std::uint8_t> msg,
                          const DomainSeparationTag& dst) {
  const auto u = hash_to_field(msg, dst);
  const G1Point q0 = detail::iso_map(detail::map_to_curve_sswu(u[0]));
  const G1Point q1 = detail::iso_map(detail::map_to_curve_sswu(u[1]));
  return (q0 + q1).mul_vartime(detail::kG1EffectiveCofactor).normalize();
}

inline G1Point hash_to_g1(std::string_view msg, const DomainSeparationTag& dst) {
  return hash_to_g1(std::span(reinterpret_cast<const std::uint8_t*>(msg.data()),
                              msg.size()),
                    dst);
}

}  // namespace ctbls
