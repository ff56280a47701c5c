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

// A scheme whose costs are chosen by the caller: encrypting plaintext m
// charges m units, a ciphertext carries the cost its decryption charges and
// whether it decrypts.

#ifndef CCA2TA_TESTS_STUB_SCHEME_HPP_
#define CCA2TA_TESTS_STUB_SCHEME_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cca2ta/scheme.hpp"
#include "cca2ta/serialization.hpp"

namespace cca2ta::testing {

struct StubCiphertext {
  Units cost = 0;
  bool valid = true;
  std::uint64_t m = 0;
  friend bool operator==(const StubCiphertext&, const StubCiphertext&) = default;
};

class StubSpace {
 public:
  bool contains(const std::uint64_t& m) const { return m < 256; }
  std::size_t length(const std::uint64_t&) const { return 1; }
  std::size_t popcount(const std::uint64_t& m) const { return static_cast<std::size_t>(std::popcount(m)); }
  std::uint64_t sample(Rng& rng) const { return rng() % 256; }
  Natural size() const { return 256; }
  std::optional<std::vector<std::uint64_t>> enumerate(std::size_t limit) const {
    if (limit < 256) return std::nullopt;
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < 256; ++m) out.push_back(m);
    return out;
  }
};

class StubScheme {
 public:
  using PublicKey = int;
  using SecretKey = int;
  using Plaintext = std::uint64_t;
  using Ciphertext = StubCiphertext;
  using MessageSpace = StubSpace;

  explicit StubScheme(Units decrypt_cost = 0) : decrypt_cost_(decrypt_cost) {}

  std::string name() const { return "stub"; }
  std::size_t security_bits() const { return 0; }
  KeyPair<int, int> keygen(Rng&) const { return {0, 0, 0}; }
  StubCiphertext encrypt(const int&, const std::uint64_t& m, Rng&, CostLedger& ledger) const {
    ledger.charge_branch(m);
    return {decrypt_cost_, true, m};
  }
  std::optional<std::uint64_t> decrypt(const int&, const StubCiphertext& c, CostLedger& ledger,
                                       CompareMode = CompareMode::kFull) const {
    ledger.charge_branch(c.cost);
    if (!c.valid) return std::nullopt;
    return c.m;
  }
  StubSpace message_space(const int&) const { return {}; }
  Bytes encode_plaintext(const std::uint64_t& m) const {
    return std::move(ByteWriter("stub").put_natural(m)).bytes();
  }
  Bytes encode_ciphertext(const StubCiphertext& c) const {
    return std::move(ByteWriter("stub").put_natural(c.cost).put_natural(c.valid ? 1 : 0).put_natural(c.m))
        .bytes();
  }
  Bytes encode_public_key(const int&) const { return std::move(ByteWriter("stub")).bytes(); }
  std::vector<StubCiphertext> invalid_probes(const int&, const StubCiphertext& c) const {
    return {{c.cost, false, c.m}};
  }

 private:
  Units decrypt_cost_;
};

static_assert(Cryptosystem<StubScheme>);

}  // namespace cca2ta::testing

#endif  // CCA2TA_TESTS_STUB_SCHEME_HPP_
