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

#ifndef CCA2TA_GOLDWASSER_MICALI_HPP_
#define CCA2TA_GOLDWASSER_MICALI_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/errors.hpp"
#include "cca2ta/natural.hpp"
#include "cca2ta/numtheory.hpp"
#include "cca2ta/scheme.hpp"
#include "cca2ta/serialization.hpp"

namespace cca2ta {

// Goldwasser-Micali bitwise probabilistic encryption over a Blum modulus.

struct GmPublicKey {
  Natural n;  // p * q
  Natural y;  // pseudo-square
  friend bool operator==(const GmPublicKey&, const GmPublicKey&) = default;
};

struct GmSecretKey {
  Natural p;
  Natural q;
  Natural y;
  GmPublicKey public_key() const { return {p * q, y}; }
  friend bool operator==(const GmSecretKey&, const GmSecretKey&) = default;
};

using GmKeyPair = KeyPair<GmPublicKey, GmSecretKey>;

// Fixed-length plaintext; every entry is 0 or 1.
struct BitString {
  std::vector<std::uint8_t> bits;
  friend bool operator==(const BitString&, const BitString&) = default;
};

inline BitString uniform_bits(std::size_t length, std::uint8_t bit) {
  return {std::vector<std::uint8_t>(length, bit)};
}

struct GmCiphertext {
  std::vector<Natural> components;  // one per plaintext bit
  friend bool operator==(const GmCiphertext&, const GmCiphertext&) = default;
};

// y is a pseudo-square modulo p*q: a non-residue modulo both primes, hence
// Jacobi symbol +1 modulo N.
inline bool is_pseudo_square(const Natural& y, const Natural& p, const Natural& q) {
  return jacobi(y % p, p) == -1 && jacobi(y % q, q) == -1;
}

inline GmKeyPair gm_key_from_parts(const Natural& p, const Natural& q, const Natural& y) {
  if (p == q) throw DomainError("gm: primes must be distinct");
  if ((p & 3) != 3 || (q & 3) != 3) throw DomainError("gm: primes must be 3 mod 4");
  if (!is_pseudo_square(y, p, q)) throw DomainError("gm: y is not a pseudo-square");
  GmSecretKey sk{p, q, y};
  return {sk.public_key(), sk, std::max(bit_length(p), bit_length(q))};
}

// Completes a key for given Blum primes by rejection-sampling y.
inline GmKeyPair gm_key_from_primes(const Natural& p, const Natural& q, Rng& rng) {
  if (p == q) throw DomainError("gm: primes must be distinct");
  const Natural n = p * q;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const Natural y = random_range(2, n - 1, rng);
    if (is_pseudo_square(y, p, q)) return gm_key_from_parts(p, q, y);
  }
  throw SearchExhausted("gm: no pseudo-square found");
}

inline GmKeyPair gm_keygen(std::size_t bits_per_prime, Rng& rng) {
  if (bits_per_prime < 3) throw DomainError("gm_keygen: bits_per_prime must be >= 3");
  const Congruence blum{3, 4};
  const Natural p = gen_prime(bits_per_prime, blum, rng);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Natural q = gen_prime(bits_per_prime, blum, rng);
    if (q != p) return gm_key_from_primes(p, q, rng);
  }
  throw SearchExhausted("gm_keygen: no second distinct Blum prime of " +
                        std::to_string(bits_per_prime) + " bits");
}

// c = y^bit * r^2 mod N. Always two modmul units: the pseudo-square factor is
// selected, not conditionally multiplied.
inline Natural gm_encrypt_bit(const GmPublicKey& pk, int bit, const Natural& r,
                              CostLedger& ledger) {
  if (bit != 0 && bit != 1) throw DomainError("gm: plaintext bit must be 0 or 1");
  if (r <= 0 || r >= pk.n || gcd(r, pk.n) != 1) {
    throw DomainError("gm: r must be a unit modulo N");
  }
  const Natural square = mod_mul(r, r, pk.n, ledger);
  const Natural factor = bit == 1 ? pk.y : Natural(1);
  return mod_mul(factor, square, pk.n, ledger);
}

inline Natural gm_sample_unit(const Natural& n, Rng& rng) {
  for (;;) {
    Natural r = random_range(1, n - 1, rng);
    if (gcd(r, n) == 1) return r;
  }
}

inline Natural gm_encrypt_bit(const GmPublicKey& pk, int bit, Rng& rng, CostLedger& ledger) {
  return gm_encrypt_bit(pk, bit, gm_sample_unit(pk.n, rng), ledger);
}

// Quadratic-residuosity test modulo p by Euler's criterion on the ladder.
// Returns nullopt when c shares a factor with N.
inline std::optional<int> gm_decrypt_bit(const GmSecretKey& sk, const Natural& c,
                                         CostLedger& ledger) {
  const Natural n = sk.p * sk.q;
  const Natural reduced = c % n;
  const bool unit = !is_negative(c) && gcd(reduced, n) == 1;
  const Natural euler = mod_pow_ladder(reduced % sk.p, (sk.p - 1) / 2, sk.p, ledger);
  if (!unit) return std::nullopt;
  return euler == 1 ? 0 : 1;
}

class GmMessageSpace {
 public:
  explicit GmMessageSpace(std::size_t length) : length_(length) {}

  bool contains(const BitString& m) const {
    if (m.bits.size() != length_) return false;
    for (std::uint8_t b : m.bits) {
      if (b > 1) return false;
    }
    return true;
  }
  std::size_t length(const BitString& m) const { return m.bits.size(); }
  std::size_t popcount(const BitString& m) const {
    std::size_t count = 0;
    for (std::uint8_t b : m.bits) count += b;
    return count;
  }
  BitString sample(Rng& rng) const {
    BitString m;
    for (std::size_t i = 0; i < length_; ++i) m.bits.push_back(static_cast<std::uint8_t>(random_bit(rng)));
    return m;
  }
  Natural size() const { return Natural(1) << length_; }
  std::optional<std::vector<BitString>> enumerate(std::size_t limit) const {
    if (size() > limit) return std::nullopt;
    std::vector<BitString> out;
    const std::uint64_t count = std::uint64_t{1} << length_;
    for (std::uint64_t v = 0; v < count; ++v) {
      BitString m;
      for (std::size_t i = length_; i-- > 0;) m.bits.push_back(static_cast<std::uint8_t>((v >> i) & 1U));
      out.push_back(std::move(m));
    }
    return out;
  }
  std::size_t message_length() const { return length_; }

 private:
  std::size_t length_;
};

struct GmParams {
  std::size_t bits_per_prime = 16;
  std::size_t message_bits = 8;
};

class GoldwasserMicali {
 public:
  using PublicKey = GmPublicKey;
  using SecretKey = GmSecretKey;
  using Plaintext = BitString;
  using Ciphertext = GmCiphertext;
  using MessageSpace = GmMessageSpace;

  static constexpr const char* kTag = "gm";

  explicit GoldwasserMicali(GmParams params = {}) : params_(params) {
    if (params_.message_bits == 0) throw DomainError("gm: message_bits must be positive");
  }

  std::string name() const { return kTag; }
  std::size_t security_bits() const { return params_.bits_per_prime; }
  const GmParams& params() const { return params_; }

  GmKeyPair keygen(Rng& rng) const { return gm_keygen(params_.bits_per_prime, rng); }

  GmCiphertext encrypt(const GmPublicKey& pk, const BitString& m, Rng& rng,
                       CostLedger& ledger) const {
    if (!message_space(pk).contains(m)) throw DomainError("gm: plaintext outside message space");
    GmCiphertext c;
    c.components.reserve(m.bits.size());
    for (std::uint8_t bit : m.bits) c.components.push_back(gm_encrypt_bit(pk, bit, rng, ledger));
    return c;
  }

  std::optional<BitString> decrypt(const GmSecretKey& sk, const GmCiphertext& c,
                                   CostLedger& ledger,
                                   CompareMode mode = CompareMode::kFull) const {
    BitString m;
    bool rejected = c.components.size() != params_.message_bits;
    for (const Natural& component : c.components) {
      if (rejected && mode == CompareMode::kEarlyAbort) return std::nullopt;
      const std::optional<int> bit = gm_decrypt_bit(sk, component, ledger);
      if (!bit) {
        rejected = true;
        continue;
      }
      m.bits.push_back(static_cast<std::uint8_t>(*bit));
    }
    if (rejected) return std::nullopt;
    return m;
  }

  GmMessageSpace message_space(const GmPublicKey&) const {
    return GmMessageSpace(params_.message_bits);
  }

  Bytes encode_plaintext(const BitString& m) const {
    ByteWriter w(kTag);
    w.put_u32(static_cast<std::uint32_t>(m.bits.size()));
    for (std::uint8_t b : m.bits) w.put_natural(b);
    return std::move(w).bytes();
  }
  Bytes encode_ciphertext(const GmCiphertext& c) const {
    return std::move(ByteWriter(kTag).put_naturals(c.components)).bytes();
  }
  Bytes encode_public_key(const GmPublicKey& pk) const {
    return std::move(ByteWriter(kTag).put_natural(pk.n).put_natural(pk.y)).bytes();
  }
  GmCiphertext decode_ciphertext(std::span<const std::uint8_t> bytes) const {
    ByteReader r(bytes, kTag);
    GmCiphertext c{r.get_naturals()};
    r.expect_done();
    return c;
  }

  // Ciphertexts D must reject: each component in turn replaced by zero, which
  // shares every factor with N.
  std::vector<GmCiphertext> invalid_probes(const GmPublicKey&, const GmCiphertext& c) const {
    std::vector<GmCiphertext> out;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      GmCiphertext probe = c;
      probe.components[i] = 0;
      out.push_back(std::move(probe));
    }
    return out;
  }

 private:
  GmParams params_;
};

static_assert(Cryptosystem<GoldwasserMicali>);

}  // namespace cca2ta

#endif  // CCA2TA_GOLDWASSER_MICALI_HPP_
