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

#ifndef CCA2TA_SCHEME_HPP_
#define CCA2TA_SCHEME_HPP_

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/natural.hpp"

namespace cca2ta {

// How a decryption validity check compares the recomputed tag with the one
// carried by the ciphertext. kFull always inspects every position and always
// finishes the decryption work; kEarlyAbort stops at the first mismatch.
enum class CompareMode { kFull, kEarlyAbort };

template <class PublicKeyT, class SecretKeyT>
struct KeyPair {
  PublicKeyT pk;
  SecretKeyT sk;
  std::size_t security_parameter = 0;
};

// Finite plaintext space handed to adversaries and calibration.
template <class M, class P>
concept MessageSpaceOf = requires(const M& space, const P& m, Rng& rng,
                                  std::size_t limit) {
  { space.contains(m) } -> std::same_as<bool>;
  { space.length(m) } -> std::same_as<std::size_t>;
  { space.popcount(m) } -> std::same_as<std::size_t>;
  { space.sample(rng) } -> std::same_as<P>;
  { space.size() } -> std::same_as<Natural>;
  { space.enumerate(limit) } -> std::same_as<std::optional<std::vector<P>>>;
};

// A public-key cryptosystem (K, E, D) with cost-instrumented E and D.
//
// decrypt returns std::nullopt for a rejected ciphertext; rejection is an
// outcome, not an error. Scheme objects are immutable after construction.
template <class S>
concept Cryptosystem = requires(const S& s, const typename S::PublicKey& pk,
                                const typename S::SecretKey& sk,
                                const typename S::Plaintext& m,
                                const typename S::Ciphertext& c, Rng& rng,
                                CostLedger& ledger, CompareMode mode) {
  typename S::PublicKey;
  typename S::SecretKey;
  typename S::Plaintext;
  typename S::Ciphertext;
  typename S::MessageSpace;
  requires std::equality_comparable<typename S::Plaintext>;
  requires std::equality_comparable<typename S::Ciphertext>;
  requires MessageSpaceOf<typename S::MessageSpace, typename S::Plaintext>;
  { s.name() } -> std::convertible_to<std::string>;
  { s.security_bits() } -> std::same_as<std::size_t>;
  { s.keygen(rng) } -> std::same_as<KeyPair<typename S::PublicKey, typename S::SecretKey>>;
  { s.encrypt(pk, m, rng, ledger) } -> std::same_as<typename S::Ciphertext>;
  { s.decrypt(sk, c, ledger) } -> std::same_as<std::optional<typename S::Plaintext>>;
  { s.decrypt(sk, c, ledger, mode) } -> std::same_as<std::optional<typename S::Plaintext>>;
  { s.message_space(pk) } -> std::same_as<typename S::MessageSpace>;
  { s.encode_plaintext(m) } -> std::same_as<Bytes>;
  { s.encode_ciphertext(c) } -> std::same_as<Bytes>;
  { s.encode_public_key(pk) } -> std::same_as<Bytes>;
  { s.invalid_probes(pk, c) } -> std::same_as<std::vector<typename S::Ciphertext>>;
};

template <Cryptosystem S>
using KeyPairOf = KeyPair<typename S::PublicKey, typename S::SecretKey>;

}  // namespace cca2ta

#endif  // CCA2TA_SCHEME_HPP_
