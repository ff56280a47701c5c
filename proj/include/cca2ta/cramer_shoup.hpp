/*
 * Copyright 2026 The cca2ta Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CCA2TA_CRAMER_SHOUP_HPP_
#define CCA2TA_CRAMER_SHOUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/digest.hpp"
#include "cca2ta/errors.hpp"
#include "cca2ta/natural.hpp"
#include "cca2ta/numtheory.hpp"
#include "cca2ta/scheme.hpp"
#include "cca2ta/serialization.hpp"

namespace cca2ta {

// Public group parameters: p prime, q prime with q | p - 1, and two distinct
// generators of the order-q subgroup of Z_p^*.
struct CsGroup {
  Natural p;
  Natural q;
  Natural g1;
  Natural g2;

  std::size_t element_width() const { return byte_length(p); }
  friend bool operator==(const CsGroup&, const CsGroup&) = default;
};

// Hash H(u1, u2, e) reduced mod q.
//   kSha256: SHA-256 over the fixed-width big-endian encodings.
//   kToy:    the same encodings read as one integer; hand-checkable.
enum class CsHash { kSha256, kToy };

inline std::string to_string(CsHash h) { return h == CsHash::kSha256 ? "sha256" : "toy"; }

enum class CsExponentiation { kLadder, kLeaky };

inline bool has_order_q(const Natural& g, const CsGroup& group) {
  return g > 1 && g < group.p && internal::pow_mod(g, group.q, group.p) == 1;
}

inline void validate_group(const CsGroup& group, Rng& rng) {
  if (group.p < 5 || group.q < 2) throw DomainError("cs: group too small");
  if (!is_probable_prime(group.p, rng) || !is_probable_prime(group.q, rng)) {
    throw DomainError("cs: p and q must be prime");
  }
  if ((group.p - 1) % group.q != 0) throw DomainError("cs: q must divide p - 1");
  if (!has_order_q(group.g1, group) || !has_order_q(group.g2, group)) {
    throw DomainError("cs: generators must have order q");
  }
  if (group.g1 == group.g2) throw DomainError("cs: generators must differ");
}

// Subgroup order gets half the modulus bits.
inline CsGroup cs_generate_group(std::size_t group_bits, Rng& rng) {
  if (group_bits < 8) throw DomainError("cs: group_bits must be >= 8");
  const std::size_t q_bits = group_bits / 2;
  for (int outer = 0; outer < 64; ++outer) {
    const Natural q = gen_prime(q_bits, std::nullopt, rng);
    const Natural lo = ((Natural(1) << (group_bits - 1)) + q - 1) / q;
    const Natural hi = ((Natural(1) << group_bits) - 2) / q;
    if (hi < lo) continue;
    for (int attempt = 0; attempt < 4096; ++attempt) {
      Natural k = random_range(lo, hi, rng);
      if (bit_test(k, 0)) continue;
      const Natural p = k * q + 1;
      if (bit_length(p) != group_bits || !is_probable_prime(p, rng)) continue;
      const Natural cofactor = (p - 1) / q;
      auto pick_generator = [&](const Natural& avoid) -> std::optional<Natural> {
        for (int tries = 0; tries < 256; ++tries) {
          const Natural g = internal::pow_mod(random_range(2, p - 2, rng), cofactor, p);
          if (g != 1 && g != avoid) return g;
        }
        return std::nullopt;
      };
      const std::optional<Natural> g1 = pick_generator(0);
      if (!g1) continue;
      const std::optional<Natural> g2 = pick_generator(*g1);
      if (!g2) continue;
      return {p, q, *g1, *g2};
    }
  }
  throw SearchExhausted("cs: no " + std::to_string(group_bits) + "-bit group found");
}

struct CsPublicKey {
  CsGroup group;
  Natural c;
  Natural d;
  Natural h;
  CsHash hash = CsHash::kSha256;
  friend bool operator==(const CsPublicKey&, const CsPublicKey&) = default;
};

struct CsSecretKey {
  CsGroup group;
  Natural x1, x2, y1, y2, z;
  CsHash hash = CsHash::kSha256;

  // c = g1^x1 g2^x2, d = g1^y1 g2^y2, h = g1^z.
  CsPublicKey public_key() const {
    const Natural& p = group.p;
    auto pw = [&](const Natural& b, const Natural& e) { return internal::pow_mod(b, e, p); };
    return {group, pw(group.g1, x1) * pw(group.g2, x2) % p,
            pw(group.g1, y1) * pw(group.g2, y2) % p, pw(group.g1, z), hash};
  }
  friend bool operator==(const CsSecretKey&, const CsSecretKey&) = default;
};

using CsKeyPair = KeyPair<CsPublicKey, CsSecretKey>;

struct CsCiphertext {
  Natural u1, u2, e, v;
  friend bool operator==(const CsCiphertext&, const CsCiphertext&) = default;
};

inline CsKeyPair cs_key_from_secret(const CsGroup& group, const Natural& x1,
                                    const Natural& x2, const Natural& y1,
                                    const Natural& y2, const Natural& z,
                                    CsHash hash = CsHash::kSha256) {
  for (const Natural* s : {&x1, &x2, &y1, &y2, &z}) {
    if (is_negative(*s) || *s >= group.q) throw DomainError("cs: secret exponents must lie in [0, q)");
  }
  CsSecretKey sk{group, x1, x2, y1, y2, z, hash};
  return {sk.public_key(), sk, bit_length(group.p)};
}

inline Natural cs_hash(const CsGroup& group, CsHash kind, const Natural& u1,
                       const Natural& u2, const Natural& e) {
  const std::size_t width = group.element_width();
  Bytes buf;
  for (const Natural* x : {&u1, &u2, &e}) {
    const Bytes part = to_bytes_fixed(*x, width);
    buf.insert(buf.end(), part.begin(), part.end());
  }
  if (kind == CsHash::kToy) return from_bytes(buf) % group.q;
  const Sha256Digest d = sha256(buf);
  return from_bytes(d) % group.q;
}

class CsMessageSpace {
 public:
  explicit CsMessageSpace(CsGroup group) : group_(std::move(group)) {}

  bool contains(const Natural& m) const {
    return m >= 1 && m < group_.p && internal::pow_mod(m, group_.q, group_.p) == 1;
  }
  std::size_t length(const Natural&) const { return group_.element_width(); }
  std::size_t popcount(const Natural& m) const { return cca2ta::popcount(m); }
  Natural sample(Rng& rng) const {
    return internal::pow_mod(group_.g1, random_below(group_.q, rng), group_.p);
  }
  Natural size() const { return group_.q; }
  std::optional<std::vector<Natural>> enumerate(std::size_t limit) const {
    if (group_.q > limit) return std::nullopt;
    std::vector<Natural> out;
    Natural x = 1;
    for (Natural k = 0; k < group_.q; ++k) {
      out.push_back(x);
      x = x * group_.g1 % group_.p;
    }
    return out;
  }

 private:
  CsGroup group_;
};

// Cramer-Shoup over a fixed public group. keygen samples the five secret
// exponents; the group is a system parameter of the scheme instance.
//
// Every exponentiation goes through the ledgered ladder (or, when asked, the
// leaky square-and-multiply), and with CompareMode::kFull the rejection path
// performs exactly the work of the accept path.
class CramerShoup {
 public:
  using PublicKey = CsPublicKey;
  using SecretKey = CsSecretKey;
  using Plaintext = Natural;
  using Ciphertext = CsCiphertext;
  using MessageSpace = CsMessageSpace;

  static constexpr const char* kTag = "cs";

  explicit CramerShoup(CsGroup group, CsHash hash = CsHash::kSha256,
                       CsExponentiation exponentiation = CsExponentiation::kLadder)
      : group_(std::move(group)), hash_(hash), exponentiation_(exponentiation) {}

  static CramerShoup generate(std::size_t group_bits, Rng& rng,
                              CsHash hash = CsHash::kSha256) {
    return CramerShoup(cs_generate_group(group_bits, rng), hash);
  }

  std::string name() const { return kTag; }
  std::size_t security_bits() const { return bit_length(group_.p); }
  const CsGroup& group() const { return group_; }
  CsHash hash() const { return hash_; }

  CsKeyPair keygen(Rng& rng) const {
    auto exponent = [&] { return random_below(group_.q, rng); };
    const Natural x1 = exponent(), x2 = exponent(), y1 = exponent(), y2 = exponent(),
                  z = exponent();
    return cs_key_from_secret(group_, x1, x2, y1, y2, z, hash_);
  }

  // Encryption with caller-chosen randomness; r = 0 is allowed here and
  // yields the degenerate (1, 1, m, 1).
  CsCiphertext encrypt_with_randomness(const CsPublicKey& pk, const Natural& m,
                                       const Natural& r, CostLedger& ledger) const {
    const CsGroup& g = pk.group;
    if (!CsMessageSpace(g).contains(m)) throw DomainError("cs: plaintext outside the order-q subgroup");
    if (is_negative(r) || r >= g.q) throw DomainError("cs: randomness must lie in [0, q)");
    CsCiphertext c;
    c.u1 = pow(g.g1, r, g, ledger);
    c.u2 = pow(g.g2, r, g, ledger);
    c.e = mod_mul(pow(pk.h, r, g, ledger), m, g.p, ledger);
    const Natural alpha = cs_hash(g, pk.hash, c.u1, c.u2, c.e);
    const Natural r_alpha = mod_mul(r, alpha, g.q, ledger);
    c.v = mod_mul(pow(pk.c, r, g, ledger), pow(pk.d, r_alpha, g, ledger), g.p, ledger);
    return c;
  }

  CsCiphertext encrypt(const CsPublicKey& pk, const Natural& m, Rng& rng,
                       CostLedger& ledger) const {
    const Natural r = random_range(1, pk.group.q - 1, rng);
    return encrypt_with_randomness(pk, m, r, ledger);
  }

  std::optional<Natural> decrypt(const CsSecretKey& sk, const CsCiphertext& c,
                                 CostLedger& ledger,
                                 CompareMode mode = CompareMode::kFull) const {
    const CsGroup& g = sk.group;
    bool valid = true;
    for (const Natural* x : {&c.u1, &c.u2, &c.e, &c.v}) {
      if (is_negative(*x) || x->is_zero() || *x >= g.p) valid = false;
    }
    if (!valid && mode == CompareMode::kEarlyAbort) return std::nullopt;
    auto reduce = [&](const Natural& x) { return is_negative(x) ? Natural(0) : Natural(x % g.p); };
    const Natural u1 = reduce(c.u1), u2 = reduce(c.u2), e = reduce(c.e), v = reduce(c.v);

    const Natural alpha = cs_hash(g, sk.hash, u1, u2, e);
    const Natural a = (sk.x1 + mod_mul(sk.y1, alpha, g.q, ledger)) % g.q;
    const Natural b = (sk.x2 + mod_mul(sk.y2, alpha, g.q, ledger)) % g.q;
    const Natural expected = mod_mul(pow(u1, a, g, ledger), pow(u2, b, g, ledger), g.p, ledger);

    // Byte-wise tag comparison, most significant byte first.
    const std::size_t width = g.element_width();
    const Bytes lhs = to_bytes_fixed(expected, width);
    const Bytes rhs = to_bytes_fixed(v, width);
    for (std::size_t i = 0; i < width; ++i) {
      ledger.charge_branch();
      if (lhs[i] != rhs[i]) {
        valid = false;
        if (mode == CompareMode::kEarlyAbort) return std::nullopt;
      }
    }

    const Natural m = mod_mul(e, pow(u1, g.p - 1 - sk.z, g, ledger), g.p, ledger);
    if (!valid) return std::nullopt;
    return m;
  }

  CsMessageSpace message_space(const CsPublicKey& pk) const { return CsMessageSpace(pk.group); }

  Bytes encode_plaintext(const Natural& m) const {
    return std::move(ByteWriter(kTag).put_natural(m)).bytes();
  }
  Bytes encode_ciphertext(const CsCiphertext& c) const {
    return std::move(ByteWriter(kTag).put_natural(c.u1).put_natural(c.u2).put_natural(c.e).put_natural(c.v)).bytes();
  }
  Bytes encode_public_key(const CsPublicKey& pk) const {
    ByteWriter w(kTag);
    w.put_natural(pk.group.p).put_natural(pk.group.q).put_natural(pk.group.g1).put_natural(pk.group.g2);
    w.put_natural(pk.c).put_natural(pk.d).put_natural(pk.h).put_string(to_string(pk.hash));
    return std::move(w).bytes();
  }
  CsCiphertext decode_ciphertext(std::span<const std::uint8_t> bytes) const {
    ByteReader r(bytes, kTag);
    CsCiphertext c;
    c.u1 = r.get_natural();
    c.u2 = r.get_natural();
    c.e = r.get_natural();
    c.v = r.get_natural();
    r.expect_done();
    return c;
  }

  // Probes D must reject: each component nudged inside [1, p), v with one
  // byte disturbed at every position (most significant first), and an
  // out-of-range v.
  std::vector<CsCiphertext> invalid_probes(const CsPublicKey& pk, const CsCiphertext& c) const {
    const Natural& p = pk.group.p;
    std::vector<CsCiphertext> out;
    auto nudge = [&](const Natural& x) { return Natural(x % (p - 1) + 1); };
    for (Natural CsCiphertext::*field : {&CsCiphertext::u1, &CsCiphertext::u2,
                                         &CsCiphertext::e, &CsCiphertext::v}) {
      CsCiphertext probe = c;
      probe.*field = nudge(c.*field);
      if (probe != c) out.push_back(std::move(probe));
    }
    for (CsCiphertext& probe : tag_byte_probes(pk, c)) out.push_back(std::move(probe));
    CsCiphertext wide = c;
    wide.v = c.v + p;
    out.push_back(std::move(wide));
    return out;
  }

  std::vector<CsCiphertext> tag_byte_probes(const CsPublicKey& pk, const CsCiphertext& c) const;

 private:
  Natural pow(const Natural& base, const Natural& exp, const CsGroup& g, CostLedger& ledger) const {
    if (exponentiation_ == CsExponentiation::kLeaky) return mod_pow_leaky(base, exp, g.p, ledger);
    return mod_pow_ladder(base, exp, g.p, ledger);
  }

  CsGroup group_;
  CsHash hash_;
  CsExponentiation exponentiation_;
};

static_assert(Cryptosystem<CramerShoup>);

// For each byte position of v (most significant first), the ciphertext with
// the low bit of that byte flipped. Positions whose flip would leave [1, p)
// are skipped. Needs only public data.
inline std::vector<CsCiphertext> craft_tag_probes(const CsPublicKey& pk, const CsCiphertext& c) {
  const std::size_t width = pk.group.element_width();
  std::vector<CsCiphertext> out;
  for (std::size_t pos = 0; pos < width; ++pos) {
    const Natural flip = Natural(1) << (8 * (width - 1 - pos));
    const Natural v = c.v ^ flip;
    if (v.is_zero() || v >= pk.group.p) continue;
    CsCiphertext probe = c;
    probe.v = v;
    out.push_back(std::move(probe));
  }
  return out;
}

inline std::vector<CsCiphertext> CramerShoup::tag_byte_probes(const CsPublicKey& pk,
                                                             const CsCiphertext& c) const {
  return craft_tag_probes(pk, c);
}

inline CsKeyPair cs_keygen(std::size_t group_bits, Rng& rng, CsHash hash = CsHash::kSha256) {
  return CramerShoup::generate(group_bits, rng, hash).keygen(rng);
}

}  // namespace cca2ta

#endif  // CCA2TA_CRAMER_SHOUP_HPP_
