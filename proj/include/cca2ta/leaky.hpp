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

#ifndef CCA2TA_LEAKY_HPP_
#define CCA2TA_LEAKY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/scheme.hpp"

namespace cca2ta {

// Secret-dependent cost profile grafted onto a scheme to build the target of
// a timing adversary.
struct LeakProfile {
  Units enc_leak = 0;            // units charged per set plaintext bit
  bool dec_early_abort = false;  // validity check stops at first mismatch

  bool is_zero() const { return enc_leak == 0 && !dec_early_abort; }
  friend bool operator==(const LeakProfile&, const LeakProfile&) = default;
};

template <Cryptosystem Base>
class Leaky {
 public:
  using PublicKey = typename Base::PublicKey;
  using SecretKey = typename Base::SecretKey;
  using Plaintext = typename Base::Plaintext;
  using Ciphertext = typename Base::Ciphertext;
  using MessageSpace = typename Base::MessageSpace;

  Leaky(Base base, LeakProfile profile) : base_(std::move(base)), profile_(profile) {}

  // A zero profile keeps the base name: the wrapper is then indistinguishable.
  std::string name() const {
    if (profile_.is_zero()) return base_.name();
    return "leaky(" + base_.name() + ")";
  }
  std::size_t security_bits() const { return base_.security_bits(); }
  const Base& base() const { return base_; }
  const LeakProfile& profile() const { return profile_; }

  KeyPairOf<Base> keygen(Rng& rng) const { return base_.keygen(rng); }

  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng,
                     CostLedger& ledger) const {
    Ciphertext c = base_.encrypt(pk, m, rng, ledger);
    ledger.charge_branch(profile_.enc_leak * base_.message_space(pk).popcount(m));
    return c;
  }

  std::optional<Plaintext> decrypt(const SecretKey& sk, const Ciphertext& c,
                                   CostLedger& ledger) const {
    return base_.decrypt(sk, c, ledger,
                         profile_.dec_early_abort ? CompareMode::kEarlyAbort : CompareMode::kFull);
  }

  std::optional<Plaintext> decrypt(const SecretKey& sk, const Ciphertext& c,
                                   CostLedger& ledger, CompareMode mode) const {
    if (profile_.dec_early_abort) mode = CompareMode::kEarlyAbort;
    return base_.decrypt(sk, c, ledger, mode);
  }

  MessageSpace message_space(const PublicKey& pk) const { return base_.message_space(pk); }
  Bytes encode_plaintext(const Plaintext& m) const { return base_.encode_plaintext(m); }
  Bytes encode_ciphertext(const Ciphertext& c) const { return base_.encode_ciphertext(c); }
  Bytes encode_public_key(const PublicKey& pk) const { return base_.encode_public_key(pk); }
  std::vector<Ciphertext> invalid_probes(const PublicKey& pk, const Ciphertext& c) const {
    return base_.invalid_probes(pk, c);
  }

 private:
  Base base_;
  LeakProfile profile_;
};

template <Cryptosystem Base>
Leaky<Base> leaky_wrap(Base base, LeakProfile profile) {
  return Leaky<Base>(std::move(base), profile);
}

}  // namespace cca2ta

#endif  // CCA2TA_LEAKY_HPP_
