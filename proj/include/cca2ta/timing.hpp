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

#ifndef CCA2TA_TIMING_HPP_
#define CCA2TA_TIMING_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/errors.hpp"
#include "cca2ta/natural.hpp"
#include "cca2ta/scheme.hpp"

namespace cca2ta {

enum class Phase { kPhase1, kChallenge, kPhase2, kFinished };
enum class OpKind { kEncrypt, kDecrypt };

inline const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::kPhase1: return "phase1";
    case Phase::kChallenge: return "challenge";
    case Phase::kPhase2: return "phase2";
    case Phase::kFinished: return "finished";
  }
  return "?";
}

inline const char* to_string(OpKind op) {
  return op == OpKind::kEncrypt ? "encrypt" : "decrypt";
}

// What a timing adversary observes for one interaction: the ledger total of
// the cryptographic call and the network delay of each direction.
struct TimingView {
  OpKind op_kind = OpKind::kEncrypt;
  Units compute_cost = 0;
  Units network_delay_out = 0;
  Units network_delay_back = 0;
  Phase phase = Phase::kPhase1;
  // Wall-clock nanoseconds of the call, only when explicitly enabled. Never
  // used by acceptance checks.
  std::optional<std::uint64_t> wall_ns;

  Units round_trip() const { return network_delay_out + compute_cost + network_delay_back; }
  friend bool operator==(const TimingView&, const TimingView&) = default;
};

// delay(msg) = base + per_byte * len(msg) + jitter(index), with jitter drawn
// from [0, jitter_max] by hashing (jitter_seed, index).
struct DelayModel {
  Units base = 0;
  Units per_byte = 0;
  std::uint64_t jitter_seed = 0;
  Units jitter_max = 0;
  friend bool operator==(const DelayModel&, const DelayModel&) = default;
};

inline Units network_delay(const DelayModel& model, std::size_t message_bytes,
                           std::uint64_t index) {
  Units jitter = 0;
  if (model.jitter_max > 0) {
    jitter = derive_seed(model.jitter_seed, {index}) % (model.jitter_max + 1);
  }
  return model.base + model.per_byte * message_bytes + jitter;
}

struct FixedTimeConfig {
  Units t_ft_encrypt = 1;
  Units t_ft_decrypt = 1;
  friend bool operator==(const FixedTimeConfig&, const FixedTimeConfig&) = default;
};

// Reports exactly t_ft_encrypt for every encryption and exactly t_ft_decrypt
// for every decryption, rejected inputs included. The inner call runs on a
// scratch ledger; the difference to the budget is charged as padding. An
// inner call that needs more than its budget raises BudgetOverflow.
template <Cryptosystem Inner>
class FixedTime {
 public:
  using PublicKey = typename Inner::PublicKey;
  using SecretKey = typename Inner::SecretKey;
  using Plaintext = typename Inner::Plaintext;
  using Ciphertext = typename Inner::Ciphertext;
  using MessageSpace = typename Inner::MessageSpace;

  FixedTime(Inner inner, FixedTimeConfig config) : inner_(std::move(inner)), config_(config) {
    if (config_.t_ft_encrypt < 1 || config_.t_ft_decrypt < 1) {
      throw DomainError("fixed-time budgets must be >= 1");
    }
  }

  std::string name() const { return "fixed_time(" + inner_.name() + ")"; }
  std::size_t security_bits() const { return inner_.security_bits(); }
  const Inner& inner() const { return inner_; }
  const FixedTimeConfig& config() const { return config_; }

  KeyPairOf<Inner> keygen(Rng& rng) const { return inner_.keygen(rng); }

  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng,
                     CostLedger& ledger) const {
    CostLedger scratch;
    Ciphertext c = inner_.encrypt(pk, m, rng, scratch);
    settle(scratch, config_.t_ft_encrypt, "encrypt", ledger);
    return c;
  }

  std::optional<Plaintext> decrypt(const SecretKey& sk, const Ciphertext& c,
                                   CostLedger& ledger) const {
    CostLedger scratch;
    std::optional<Plaintext> m = inner_.decrypt(sk, c, scratch);
    settle(scratch, config_.t_ft_decrypt, "decrypt", ledger);
    return m;
  }

  std::optional<Plaintext> decrypt(const SecretKey& sk, const Ciphertext& c,
                                   CostLedger& ledger, CompareMode mode) const {
    CostLedger scratch;
    std::optional<Plaintext> m = inner_.decrypt(sk, c, scratch, mode);
    settle(scratch, config_.t_ft_decrypt, "decrypt", ledger);
    return m;
  }

  MessageSpace message_space(const PublicKey& pk) const { return inner_.message_space(pk); }
  Bytes encode_plaintext(const Plaintext& m) const { return inner_.encode_plaintext(m); }
  Bytes encode_ciphertext(const Ciphertext& c) const { return inner_.encode_ciphertext(c); }
  Bytes encode_public_key(const PublicKey& pk) const { return inner_.encode_public_key(pk); }
  std::vector<Ciphertext> invalid_probes(const PublicKey& pk, const Ciphertext& c) const {
    return inner_.invalid_probes(pk, c);
  }

 private:
  static void settle(const CostLedger& scratch, Units budget, const char* op,
                     CostLedger& ledger) {
    if (scratch.total() > budget) {
      throw BudgetOverflow(std::string("fixed-time ") + op + " needed " +
                           std::to_string(scratch.total()) + " units, budget is " +
                           std::to_string(budget));
    }
    ledger.absorb(scratch);
    ledger.charge_padding(budget - scratch.total());
  }

  Inner inner_;
  FixedTimeConfig config_;
};

template <Cryptosystem Inner>
FixedTime<Inner> wrap_fixed_time(Inner inner, FixedTimeConfig config) {
  return FixedTime<Inner>(std::move(inner), config);
}

// Inputs for worst-case calibration under one key pair. Ciphertexts should
// include invalid probes so the rejection path is measured too.
template <Cryptosystem S>
struct CalibrationSample {
  KeyPairOf<S> keys;
  std::vector<typename S::Plaintext> plaintexts;
  std::vector<typename S::Ciphertext> ciphertexts;
};

struct CalibrationResult {
  FixedTimeConfig config;
  std::size_t encrypt_samples = 0;
  std::size_t decrypt_samples = 0;
  Units min_encrypt = 0;
  Units min_decrypt = 0;
  std::string note;
};

inline constexpr const char* kWorstCaseNote =
    "every padded call now costs as much as the slowest sampled input; "
    "throughput is that of the worst case";

inline Units worst_case(std::span<const Units> costs) {
  if (costs.empty()) throw DomainError("worst_case: empty sample");
  return *std::max_element(costs.begin(), costs.end());
}

// Runs E over every sample plaintext and D over every sample ciphertext and
// returns the per-function maxima as fixed-time budgets. All calibration work
// is also charged to `ledger`.
template <Cryptosystem S>
CalibrationResult calibrate_worst_case(const S& scheme, const CalibrationSample<S>& sample,
                                       Rng& rng, CostLedger& ledger) {
  if (sample.plaintexts.empty() || sample.ciphertexts.empty()) {
    throw DomainError("calibrate_worst_case: empty sample");
  }
  std::vector<Units> enc_costs;
  enc_costs.reserve(sample.plaintexts.size());
  for (const auto& m : sample.plaintexts) {
    CostLedger call;
    scheme.encrypt(sample.keys.pk, m, rng, call);
    enc_costs.push_back(call.total());
    ledger.absorb(call);
  }
  std::vector<Units> dec_costs;
  dec_costs.reserve(sample.ciphertexts.size());
  for (const auto& c : sample.ciphertexts) {
    CostLedger call;
    scheme.decrypt(sample.keys.sk, c, call);
    dec_costs.push_back(call.total());
    ledger.absorb(call);
  }
  CalibrationResult result;
  result.config = {worst_case(enc_costs), worst_case(dec_costs)};
  result.encrypt_samples = enc_costs.size();
  result.decrypt_samples = dec_costs.size();
  result.min_encrypt = *std::min_element(enc_costs.begin(), enc_costs.end());
  result.min_decrypt = *std::min_element(dec_costs.begin(), dec_costs.end());
  result.note = kWorstCaseNote;
  return result;
}

struct SampleOptions {
  // Message spaces up to this size are enumerated completely.
  std::size_t enumerate_limit = std::size_t{1} << 17;
  // Otherwise this many plaintexts are drawn at random.
  std::size_t random_plaintexts = 4096;
  // Plaintexts encrypted to seed the decryption sample (valid ciphertexts plus
  // all of their invalid probes).
  std::size_t ciphertext_seeds = 64;
};

template <Cryptosystem S>
CalibrationSample<S> build_calibration_sample(const S& scheme, Rng& rng,
                                              const SampleOptions& options = {}) {
  CalibrationSample<S> sample{scheme.keygen(rng), {}, {}};
  const auto space = scheme.message_space(sample.keys.pk);
  if (auto all = space.enumerate(options.enumerate_limit)) {
    sample.plaintexts = std::move(*all);
  } else {
    for (std::size_t i = 0; i < options.random_plaintexts; ++i) {
      sample.plaintexts.push_back(space.sample(rng));
    }
  }
  for (std::size_t i = 0; i < options.ciphertext_seeds; ++i) {
    const auto& m = sample.plaintexts[i % sample.plaintexts.size()];
    CostLedger unused;
    auto c = scheme.encrypt(sample.keys.pk, m, rng, unused);
    for (auto& probe : scheme.invalid_probes(sample.keys.pk, c)) {
      sample.ciphertexts.push_back(std::move(probe));
    }
    sample.ciphertexts.push_back(std::move(c));
  }
  return sample;
}

}  // namespace cca2ta

#endif  // CCA2TA_TIMING_HPP_
