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

#include "cca2ta/adversaries.hpp"
#include "cca2ta/leaky.hpp"
#include "cca2ta/timing.hpp"

namespace cca2ta {
namespace {

using LeakyCs = Leaky<CramerShoup>;

LeakyCs leaky_cs(LeakProfile profile) {
  Rng rng(17);
  return leaky_wrap(CramerShoup::generate(32, rng), profile);
}

ExperimentOptions options(std::size_t trials, std::uint64_t seed) {
  ExperimentOptions o;
  o.trials_per_arm = trials;
  o.master_seed = seed;
  o.threads = 4;
  return o;
}

TEST(Requirements, DeclaredPerAdversary) {
  EXPECT_FALSE(RandomGuessAdversary<CramerShoup>().requirements().needs_timing);
  const Requirements mall = GmMalleabilityAdversary<GoldwasserMicali>().requirements();
  EXPECT_TRUE(mall.needs_oracle_phase2);
  EXPECT_FALSE(mall.needs_timing);
  const Requirements timing = TimingDistinguisher<CramerShoup>().requirements();
  EXPECT_TRUE(timing.needs_timing);
  EXPECT_FALSE(timing.needs_oracle_phase1);
  const Requirements probe = EarlyAbortProbeAdversary<CramerShoup>().requirements();
  EXPECT_TRUE(probe.needs_oracle_phase1);
  EXPECT_TRUE(probe.needs_timing);
}

TEST(Pairing, TimingAdversariesNeedTimingExperiment) {
  const LeakyCs scheme = leaky_cs({10, true});
  for (auto kind : {ExperimentKind::kCpa, ExperimentKind::kCca1, ExperimentKind::kCca2}) {
    EXPECT_THROW(run_experiment(kind, scheme, timing_distinguisher_adversary<LeakyCs>(), options(2, 1)),
                 IncompatiblePairing);
    EXPECT_THROW(run_experiment(kind, scheme, early_abort_probe_adversary<LeakyCs>(), options(2, 1)),
                 IncompatiblePairing);
  }
}

TEST(Pairing, MissingOracleIsAWarningAndTheQueryFaults) {
  const GoldwasserMicali gm(GmParams{16, 4});
  const auto r = run_experiment(ExperimentKind::kCpa, gm, gm_malleability_adversary<GoldwasserMicali>(),
                                options(5, 1));
  ASSERT_EQ(r.warnings.size(), 1U);
  EXPECT_TRUE(r.all_trials_faulted);
  EXPECT_EQ(r.transcripts[0].fault->kind, "policy-violation");
}

TEST(GmMalleability, WinsUnderCca2AndLosesUnderCca1) {
  const GoldwasserMicali gm(GmParams{16, 8});
  const auto cca2 = run_experiment(ExperimentKind::kCca2, gm, gm_malleability_adversary<GoldwasserMicali>(),
                                   options(200, 2));
  EXPECT_DOUBLE_EQ(cca2.estimate.advantage, 1.0);
  EXPECT_EQ(cca2.estimate.faults, 0U);
  for (const Transcript& t : cca2.transcripts) {
    ASSERT_EQ(t.queries.size(), 1U);
    ASSERT_NE(t.queries[0].ciphertext_digest, *t.c_star_digest);
  }
  const auto cca1 = run_experiment(ExperimentKind::kCca1, gm, gm_malleability_adversary<GoldwasserMicali>(),
                                   options(200, 2));
  EXPECT_DOUBLE_EQ(cca1.estimate.advantage, 0.0);
  EXPECT_EQ(cca1.estimate.faults, 400U);
}

TEST(TimingDistinguisher, ReadsTheEncryptionLeak) {
  const LeakyCs scheme = leaky_cs({10, true});
  const auto r = run_experiment(ExperimentKind::kCca2Ta, scheme, timing_distinguisher_adversary<LeakyCs>(),
                                options(200, 3));
  EXPECT_GE(r.estimate.advantage, 0.95);
  const auto& notes = r.transcripts[0].adversary_notes;
  EXPECT_LT(notes["cost_m0"].get<Units>(), notes["cost_m1"].get<Units>());
}

TEST(TimingDistinguisher, HandsOffWithoutALeak) {
  const LeakyCs scheme = leaky_cs({0, false});
  const auto r = run_experiment(ExperimentKind::kCca2Ta, scheme, timing_distinguisher_adversary<LeakyCs>(),
                                options(200, 4));
  EXPECT_DOUBLE_EQ(r.estimate.advantage, 0.0);
}

TEST(TimingDistinguisher, ExplicitCostTableIsUsed) {
  const LeakyCs scheme = leaky_cs({10, false});
  // Both references far above any real cost: the lower one is always nearer.
  const auto r = run_experiment(ExperimentKind::kCca2Ta, scheme,
                                timing_distinguisher_adversary<LeakyCs>(CostTable{1000000, 2000000}),
                                options(20, 5));
  EXPECT_DOUBLE_EQ(r.estimate.p_exp0, 0.0);
  EXPECT_DOUBLE_EQ(r.estimate.p_exp1, 0.0);
}

TEST(EarlyAbortProbe, SeesTheRejectionLeakOnlyWhenPresent) {
  const LeakyCs leaky = leaky_cs({0, true});
  const auto leak = run_experiment(ExperimentKind::kCca2Ta, leaky, early_abort_probe_adversary<LeakyCs>(),
                                   options(20, 6));
  for (const Transcript& t : leak.transcripts) {
    ASSERT_TRUE(t.adversary_notes["leak_detected"].get<bool>());
    ASSERT_EQ(t.adversary_notes["accepted_probes"].get<std::size_t>(), 0U);
  }
  const LeakyCs clean = leaky_cs({0, false});
  const auto flat = run_experiment(ExperimentKind::kCca2Ta, clean, early_abort_probe_adversary<LeakyCs>(),
                                   options(20, 6));
  for (const Transcript& t : flat.transcripts) {
    ASSERT_FALSE(t.adversary_notes["leak_detected"].get<bool>());
  }
}

TEST(CraftedProbes, FlipOneTagByteEach) {
  Rng rng(8);
  const CramerShoup cs = CramerShoup::generate(32, rng);
  const auto kp = cs.keygen(rng);
  CostLedger ledger;
  const CsCiphertext c = cs.encrypt(kp.pk, cs.message_space(kp.pk).sample(rng), rng, ledger);
  for (const CsCiphertext& probe : craft_tag_probes(kp.pk, c)) {
    EXPECT_EQ(probe.u1, c.u1);
    EXPECT_EQ(probe.e, c.e);
    EXPECT_EQ(popcount(Natural(probe.v ^ c.v)), 1U);
    EXPECT_LT(probe.v, cs.group().p);
  }
}

}  // namespace
}  // namespace cca2ta
