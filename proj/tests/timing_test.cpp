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

#include <gtest/gtest.h>

#include <set>

#include "cca2ta/adversaries.hpp"
#include "cca2ta/cramer_shoup.hpp"
#include "cca2ta/games.hpp"
#include "cca2ta/goldwasser_micali.hpp"
#include "cca2ta/leaky.hpp"
#include "cca2ta/timing.hpp"
#include "stub_scheme.hpp"

namespace cca2ta {
namespace {

using testing::StubCiphertext;
using testing::StubScheme;

TEST(FixedTime, PadsEncryptionUpToBudget) {
  const auto ft = wrap_fixed_time(StubScheme(), FixedTimeConfig{100, 100});
  Rng rng(1);
  CostLedger ledger;
  ft.encrypt(0, 37, rng, ledger);
  EXPECT_EQ(ledger.total(), 100U);
  EXPECT_EQ(ledger.branch_count(), 37U);
  EXPECT_EQ(ledger.padding_count(), 63U);
  EXPECT_EQ(ft.name(), "fixed_time(stub)");
}

TEST(FixedTime, RejectionsReportTheBudgetToo) {
  const auto ft = wrap_fixed_time(StubScheme(), FixedTimeConfig{100, 100});
  CostLedger rejected, accepted;
  EXPECT_EQ(ft.decrypt(0, StubCiphertext{12, false, 0}, rejected), std::nullopt);
  EXPECT_EQ(ft.decrypt(0, StubCiphertext{90, true, 5}, accepted), 5U);
  EXPECT_EQ(rejected.total(), 100U);
  EXPECT_EQ(accepted.total(), 100U);
}

TEST(FixedTime, OverBudgetCallRaises) {
  const auto ft = wrap_fixed_time(StubScheme(), FixedTimeConfig{100, 100});
  Rng rng(1);
  CostLedger ledger;
  EXPECT_THROW(ft.encrypt(0, 130, rng, ledger), BudgetOverflow);
  EXPECT_THROW(ft.decrypt(0, StubCiphertext{101, true, 0}, ledger), BudgetOverflow);
  EXPECT_NO_THROW(ft.encrypt(0, 100, rng, ledger));
  EXPECT_THROW(wrap_fixed_time(StubScheme(), FixedTimeConfig{0, 1}), DomainError);
}

TEST(Calibration, BudgetIsTheSampleMaximum) {
  const std::vector<Units> costs = {80, 95, 100};
  EXPECT_EQ(worst_case(costs), 100U);
  const std::vector<Units> single = {42};
  EXPECT_EQ(worst_case(single), 42U);
  EXPECT_THROW(worst_case(std::vector<Units>{}), DomainError);

  const StubScheme stub;
  CalibrationSample<StubScheme> sample{{0, 0, 0}, {80, 95, 100}, {{42, true, 0}}};
  Rng rng(1);
  CostLedger ledger;
  const CalibrationResult result = calibrate_worst_case(stub, sample, rng, ledger);
  EXPECT_EQ(result.config, (FixedTimeConfig{100, 42}));
  EXPECT_EQ(result.min_encrypt, 80U);
  EXPECT_EQ(result.encrypt_samples, 3U);
  EXPECT_EQ(result.decrypt_samples, 1U);
  EXPECT_EQ(ledger.total(), 80U + 95U + 100U + 42U);
  EXPECT_FALSE(result.note.empty());

  sample.plaintexts.clear();
  EXPECT_THROW(calibrate_worst_case(stub, sample, rng, ledger), DomainError);
}

TEST(NetworkDelay, ConstantAffineAndJitter) {
  const DelayModel constant{5, 0, 0, 0};
  EXPECT_EQ(network_delay(constant, 0, 0), 5U);
  EXPECT_EQ(network_delay(constant, 1000, 7), 5U);
  const DelayModel affine{5, 2, 0, 0};
  EXPECT_EQ(network_delay(affine, 10, 3), 25U);
  const DelayModel jittery{5, 1, 99, 3};
  std::set<Units> seen;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Units d = network_delay(jittery, 10, i);
    ASSERT_EQ(d, network_delay(jittery, 10, i));
    ASSERT_GE(d, 15U);
    ASSERT_LE(d, 18U);
    seen.insert(d);
  }
  EXPECT_EQ(seen.size(), 4U);
}

TEST(FixedTime, CalibratedLeakyCramerShoupIsConstantOnFreshInputs) {
  Rng rng(2);
  const auto leaky = leaky_wrap(CramerShoup::generate(32, rng), LeakProfile{10, true});
  const CalibrationSample<Leaky<CramerShoup>> sample = build_calibration_sample(leaky, rng);
  CostLedger calibration_ledger;
  const CalibrationResult cal = calibrate_worst_case(leaky, sample, rng, calibration_ledger);
  EXPECT_GT(cal.config.t_ft_encrypt, cal.min_encrypt);
  EXPECT_GT(cal.config.t_ft_decrypt, cal.min_decrypt);
  const auto ft = wrap_fixed_time(leaky, cal.config);
  const auto& kp = sample.keys;
  const auto space = ft.message_space(kp.pk);
  for (int i = 0; i < 1000; ++i) {
    CostLedger enc;
    const CsCiphertext c = ft.encrypt(kp.pk, space.sample(rng), rng, enc);
    ASSERT_EQ(enc.total(), cal.config.t_ft_encrypt);
    CostLedger dec;
    ASSERT_TRUE(ft.decrypt(kp.sk, c, dec).has_value());
    ASSERT_EQ(dec.total(), cal.config.t_ft_decrypt);
    for (const CsCiphertext& probe : ft.invalid_probes(kp.pk, c)) {
      CostLedger rej;
      ASSERT_FALSE(ft.decrypt(kp.sk, probe, rej).has_value());
      ASSERT_EQ(rej.total(), cal.config.t_ft_decrypt);
    }
  }
}

TEST(Leaky, EncryptionCostStrictlyIncreasesWithPopcount) {
  const auto scheme = leaky_wrap(GoldwasserMicali(GmParams{16, 4}), LeakProfile{10, false});
  Rng rng(3);
  const auto kp = scheme.keygen(rng);
  std::vector<Units> by_popcount;
  for (std::size_t ones = 0; ones <= 4; ++ones) {
    BitString m = uniform_bits(4, 0);
    for (std::size_t i = 0; i < ones; ++i) m.bits[i] = 1;
    CostLedger ledger;
    scheme.encrypt(kp.pk, m, rng, ledger);
    by_popcount.push_back(ledger.total());
  }
  for (std::size_t i = 1; i < by_popcount.size(); ++i) {
    EXPECT_EQ(by_popcount[i], by_popcount[i - 1] + 10);
  }
}

TEST(TimingViews, StreamIsIdenticalAcrossReruns) {
  Rng setup(4);
  const auto scheme = leaky_wrap(CramerShoup::generate(32, setup), LeakProfile{10, true});
  using S = Leaky<CramerShoup>;
  const DelayModel delay{5, 1, 7, 3};
  for (std::uint64_t seed : {1U, 2U, 3U}) {
    const Transcript a = run_trial(ExperimentKind::kCca2Ta, scheme, early_abort_probe_adversary<S>(), 0,
                                   seed, delay);
    const Transcript b = run_trial(ExperimentKind::kCca2Ta, scheme, early_abort_probe_adversary<S>(), 0,
                                   seed, delay);
    ASSERT_FALSE(a.timing_views.empty());
    EXPECT_EQ(a.timing_views, b.timing_views);
    const Transcript c = run_trial(ExperimentKind::kCca2Ta, scheme, early_abort_probe_adversary<S>(), 0,
                                   seed + 100, delay);
    EXPECT_NE(a.timing_views, c.timing_views);
  }
}

TEST(TimingViews, RoundTripIsDelaysPlusCompute) {
  const TimingView v{OpKind::kDecrypt, 40, 3, 4, Phase::kPhase2, std::nullopt};
  EXPECT_EQ(v.round_trip(), 47U);
}

TEST(TimingViews, WallClockOnlyWhenEnabled) {
  Rng setup(5);
  const auto scheme = CramerShoup::generate(32, setup);
  using S = CramerShoup;
  const Transcript off = run_trial(ExperimentKind::kCca2Ta, scheme, early_abort_probe_adversary<S>(), 1, 9,
                                   DelayModel{});
  for (const TimingView& v : off.timing_views) EXPECT_FALSE(v.wall_ns.has_value());
  const Transcript on = run_trial(ExperimentKind::kCca2Ta, scheme, early_abort_probe_adversary<S>(), 1, 9,
                                  DelayModel{}, TrialOptions{0, true});
  ASSERT_FALSE(on.timing_views.empty());
  for (const TimingView& v : on.timing_views) EXPECT_TRUE(v.wall_ns.has_value());
}

}  // namespace
}  // namespace cca2ta
