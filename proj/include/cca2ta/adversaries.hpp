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

#ifndef CCA2TA_ADVERSARIES_HPP_
#define CCA2TA_ADVERSARIES_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/cramer_shoup.hpp"
#include "cca2ta/games.hpp"
#include "cca2ta/goldwasser_micali.hpp"
#include "cca2ta/natural.hpp"
#include "cca2ta/scheme.hpp"
#include "cca2ta/timing.hpp"

namespace cca2ta {

// Picks two distinct plaintexts and guesses a fair coin. Never touches the
// oracle.
template <Cryptosystem S>
class RandomGuessAdversary final : public Adversary<S> {
 public:
  std::string name() const override { return "random_guess"; }
  Requirements requirements() const override { return {}; }

  PlaintextPair<S> choose_plaintexts(AdversaryView<S>& view) override {
    const auto space = view.scheme().message_space(view.public_key());
    auto m0 = space.sample(view.rng());
    auto m1 = space.sample(view.rng());
    while (m1 == m0) m1 = space.sample(view.rng());
    return {std::move(m0), std::move(m1)};
  }

  int guess(const typename S::Ciphertext&, AdversaryView<S>& view) override {
    return random_bit(view.rng());
  }
};

template <class S>
concept GmFamily = Cryptosystem<S> && std::same_as<typename S::PublicKey, GmPublicKey> &&
                   std::same_as<typename S::Plaintext, BitString> &&
                   std::same_as<typename S::Ciphertext, GmCiphertext>;

template <class S>
concept CsFamily = Cryptosystem<S> && std::same_as<typename S::PublicKey, CsPublicKey> &&
                   std::same_as<typename S::Ciphertext, CsCiphertext>;

// Exploits the homomorphism of GM. Challenges with all-zero versus all-one
// bits, re-randomises every component of c* by a fresh square so the query
// differs from c*, and reads b off the oracle's answer.
//
// With swap_labels the two challenge messages trade places while the
// decision rule stays "output the index of the all-ones message".
template <GmFamily S>
class GmMalleabilityAdversary final : public Adversary<S> {
 public:
  explicit GmMalleabilityAdversary(bool swap_labels = false) : swap_labels_(swap_labels) {}

  std::string name() const override { return "gm_malleability"; }
  Requirements requirements() const override { return {false, true, false}; }

  PlaintextPair<S> choose_plaintexts(AdversaryView<S>& view) override {
    const std::size_t length = view.scheme().message_space(view.public_key()).message_length();
    BitString zeros = uniform_bits(length, 0);
    BitString ones = uniform_bits(length, 1);
    if (swap_labels_) return {std::move(ones), std::move(zeros)};
    return {std::move(zeros), std::move(ones)};
  }

  int guess(const GmCiphertext& c_star, AdversaryView<S>& view) override {
    const Natural& n = view.public_key().n;
    GmCiphertext query;
    do {
      query.components.clear();
      for (const Natural& c : c_star.components) {
        const Natural r = gm_sample_unit(n, view.rng());
        query.components.push_back(c * r % n * r % n);
      }
    } while (query == c_star);
    const OracleAnswer<S> answer = view.decrypt(query);
    if (!answer.plaintext) return random_bit(view.rng());
    const auto& bits = answer.plaintext->bits;
    const std::size_t ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
    const int ones_index = swap_labels_ ? 0 : 1;
    return 2 * ones > bits.size() ? ones_index : 1 - ones_index;
  }

 private:
  bool swap_labels_;
};

// Expected compute cost of encrypting each challenge plaintext.
struct CostTable {
  Units cost_m0 = 0;
  Units cost_m1 = 0;
};

// Distinguishes by the cost of the challenge encryption. Challenges with the
// lowest- and highest-popcount plaintexts it can find, measures their
// encryption cost by running the public E itself, strips the known network
// delays off the observed round trip of c*, and answers with the nearer arm.
// Equal distances answer 0.
template <Cryptosystem S>
class TimingDistinguisher final : public Adversary<S> {
 public:
  static constexpr std::size_t kEnumerateLimit = 4096;
  static constexpr std::size_t kSearchSamples = 64;

  explicit TimingDistinguisher(std::optional<CostTable> reference = std::nullopt)
      : reference_(reference) {}

  std::string name() const override { return "timing_distinguisher"; }
  Requirements requirements() const override { return {false, false, true}; }

  PlaintextPair<S> choose_plaintexts(AdversaryView<S>& view) override {
    const auto space = view.scheme().message_space(view.public_key());
    std::vector<typename S::Plaintext> candidates;
    if (auto all = space.enumerate(kEnumerateLimit)) {
      candidates = std::move(*all);
    } else {
      for (std::size_t i = 0; i < kSearchSamples; ++i) candidates.push_back(space.sample(view.rng()));
    }
    auto by_popcount = [&](const auto& a, const auto& b) { return space.popcount(a) < space.popcount(b); };
    auto lo = *std::min_element(candidates.begin(), candidates.end(), by_popcount);
    auto hi = *std::max_element(candidates.begin(), candidates.end(), by_popcount);
    while (hi == lo) hi = space.sample(view.rng());

    if (!reference_) {
      CostLedger l0, l1;
      view.scheme().encrypt(view.public_key(), lo, view.rng(), l0);
      view.scheme().encrypt(view.public_key(), hi, view.rng(), l1);
      reference_ = CostTable{l0.total(), l1.total()};
    }
    return {std::move(lo), std::move(hi)};
  }

  int guess(const typename S::Ciphertext&, AdversaryView<S>& view) override {
    const auto feed = view.timing_feed();
    auto challenge = std::find_if(feed.begin(), feed.end(),
                                  [](const TimingView& v) { return v.phase == Phase::kChallenge; });
    if (challenge == feed.end()) return random_bit(view.rng());
    observed_ = challenge->round_trip() - challenge->network_delay_out - challenge->network_delay_back;
    const auto distance = [&](Units reference) {
      return *observed_ > reference ? *observed_ - reference : reference - *observed_;
    };
    return distance(reference_->cost_m1) < distance(reference_->cost_m0) ? 1 : 0;
  }

  nlohmann::json notes() const override {
    nlohmann::json j;
    if (reference_) {
      j["cost_m0"] = reference_->cost_m0;
      j["cost_m1"] = reference_->cost_m1;
    }
    if (observed_) j["observed"] = *observed_;
    return j;
  }

 private:
  std::optional<CostTable> reference_;
  std::optional<Units> observed_;
};

// Witnesses the rejection-time leak. In phase 1 it encrypts a message of its
// own, disturbs one byte of the validity tag at each position, submits every
// variant and records the reported rejection costs. It then guesses a coin.
template <CsFamily S>
class EarlyAbortProbeAdversary final : public Adversary<S> {
 public:
  std::string name() const override { return "early_abort_probe"; }
  Requirements requirements() const override { return {true, false, true}; }

  PlaintextPair<S> choose_plaintexts(AdversaryView<S>& view) override {
    const auto space = view.scheme().message_space(view.public_key());
    CostLedger scratch;
    const auto c = view.scheme().encrypt(view.public_key(), space.sample(view.rng()), view.rng(), scratch);
    for (const CsCiphertext& probe : craft_tag_probes(view.public_key(), c)) {
      const OracleAnswer<S> answer = view.decrypt(probe);
      if (answer.plaintext) ++accepted_;
      if (answer.timing) rejection_costs_.push_back(answer.timing->compute_cost);
    }
    auto m0 = space.sample(view.rng());
    auto m1 = space.sample(view.rng());
    while (m1 == m0) m1 = space.sample(view.rng());
    return {std::move(m0), std::move(m1)};
  }

  int guess(const typename S::Ciphertext&, AdversaryView<S>& view) override {
    return random_bit(view.rng());
  }

  // True when the rejection costs differ across tag positions.
  bool leak_detected() const {
    return !rejection_costs_.empty() &&
           std::adjacent_find(rejection_costs_.begin(), rejection_costs_.end(),
                              std::not_equal_to<>()) != rejection_costs_.end();
  }
  const std::vector<Units>& rejection_costs() const { return rejection_costs_; }

  nlohmann::json notes() const override {
    return {{"rejection_costs", rejection_costs_},
            {"leak_detected", leak_detected()},
            {"accepted_probes", accepted_}};
  }

 private:
  std::vector<Units> rejection_costs_;
  std::size_t accepted_ = 0;
};

template <Cryptosystem S>
AdversaryFactory<S> random_guess_adversary() {
  return [] { return std::make_unique<RandomGuessAdversary<S>>(); };
}

template <GmFamily S>
AdversaryFactory<S> gm_malleability_adversary(bool swap_labels = false) {
  return [swap_labels] { return std::make_unique<GmMalleabilityAdversary<S>>(swap_labels); };
}

template <Cryptosystem S>
AdversaryFactory<S> timing_distinguisher_adversary(std::optional<CostTable> reference = std::nullopt) {
  return [reference] { return std::make_unique<TimingDistinguisher<S>>(reference); };
}

template <CsFamily S>
AdversaryFactory<S> early_abort_probe_adversary() {
  return [] { return std::make_unique<EarlyAbortProbeAdversary<S>>(); };
}

}  // namespace cca2ta

#endif  // CCA2TA_ADVERSARIES_HPP_
