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

#ifndef CCA2TA_GAMES_HPP_
#define CCA2TA_GAMES_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/digest.hpp"
#include "cca2ta/errors.hpp"
#include "cca2ta/natural.hpp"
#include "cca2ta/scheme.hpp"
#include "cca2ta/timing.hpp"

namespace cca2ta {

enum class ExperimentKind { kCpa, kCca1, kCca2, kCca2Ta };

inline const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kCpa: return "CPA";
    case ExperimentKind::kCca1: return "CCA1";
    case ExperimentKind::kCca2: return "CCA2";
    case ExperimentKind::kCca2Ta: return "CCA2_TA";
  }
  return "?";
}

inline std::optional<ExperimentKind> parse_experiment_kind(std::string_view text) {
  for (ExperimentKind k : {ExperimentKind::kCpa, ExperimentKind::kCca1,
                           ExperimentKind::kCca2, ExperimentKind::kCca2Ta}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

struct OraclePolicy {
  bool phase1_decrypt_allowed = false;
  bool phase2_decrypt_allowed = false;
  bool challenge_ciphertext_forbidden = false;
  bool timing_visible = false;
  friend bool operator==(const OraclePolicy&, const OraclePolicy&) = default;
};

constexpr OraclePolicy policy_for(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kCpa: return {false, false, false, false};
    case ExperimentKind::kCca1: return {true, false, false, false};
    case ExperimentKind::kCca2: return {true, true, true, false};
    case ExperimentKind::kCca2Ta: return {true, true, true, true};
  }
  return {};
}

struct Requirements {
  bool needs_oracle_phase1 = false;
  bool needs_oracle_phase2 = false;
  bool needs_timing = false;
};

// Timing is a hard prerequisite: an adversary that reads runtimes cannot be
// run where none are shown. Oracle needs are only reported; the oracle policy
// enforces them query by query.
inline std::vector<std::string> check_pairing(ExperimentKind kind, const Requirements& req,
                                              std::string_view adversary) {
  const OraclePolicy policy = policy_for(kind);
  if (req.needs_timing && !policy.timing_visible) {
    throw IncompatiblePairing(std::string(adversary) + " needs timing views, which " +
                              to_string(kind) + " does not expose");
  }
  std::vector<std::string> warnings;
  if (req.needs_oracle_phase1 && !policy.phase1_decrypt_allowed) {
    warnings.push_back(std::string(adversary) + " expects a phase-1 oracle; queries will fault");
  }
  if (req.needs_oracle_phase2 && !policy.phase2_decrypt_allowed) {
    warnings.push_back(std::string(adversary) + " expects a phase-2 oracle; queries will fault");
  }
  return warnings;
}

template <Cryptosystem S>
struct PlaintextPair {
  typename S::Plaintext m0;
  typename S::Plaintext m1;
};

template <Cryptosystem S>
struct OracleAnswer {
  std::optional<typename S::Plaintext> plaintext;  // nullopt: rejected
  std::optional<TimingView> timing;                // only when visible
};

template <Cryptosystem S>
struct ChallengerState {
  KeyPairOf<S> keys;
  int b = 0;
  std::optional<typename S::Ciphertext> c_star;
  Phase phase = Phase::kPhase1;
};

// The decryption oracle. Enforces the phase rules of `policy` and the exact
// match exclusion of c*; any other ciphertext, however related to c*, is
// answered. The returned TimingView carries only the compute cost; network
// delays are filled in by the trial driver.
template <Cryptosystem S>
OracleAnswer<S> oracle_decrypt(const S& scheme, const ChallengerState<S>& state,
                               const OraclePolicy& policy,
                               const typename S::Ciphertext& c, CostLedger& ledger) {
  switch (state.phase) {
    case Phase::kPhase1:
      if (!policy.phase1_decrypt_allowed) throw PolicyViolation("decryption oracle closed in phase 1");
      break;
    case Phase::kPhase2:
      if (!policy.phase2_decrypt_allowed) throw PolicyViolation("decryption oracle closed in phase 2");
      if (policy.challenge_ciphertext_forbidden && state.c_star && c == *state.c_star) {
        throw ForbiddenQuery("decryption of the challenge ciphertext");
      }
      break;
    default:
      throw PolicyViolation(std::string("decryption oracle closed in ") + to_string(state.phase));
  }
  CostLedger call;
  OracleAnswer<S> answer;
  answer.plaintext = scheme.decrypt(state.keys.sk, c, call);
  ledger.absorb(call);
  if (policy.timing_visible) {
    TimingView view;
    view.op_kind = OpKind::kDecrypt;
    view.compute_cost = call.total();
    view.phase = state.phase;
    answer.timing = view;
  }
  return answer;
}

struct QueryRecord {
  Phase phase = Phase::kPhase1;
  std::string ciphertext_digest;
  std::optional<std::string> plaintext_hex;  // nullopt: rejected or faulted
  std::optional<std::string> fault;
};

struct FaultRecord {
  std::string kind;
  std::string message;
};

struct Transcript {
  std::size_t trial_index = 0;
  std::optional<int> arm;  // forced b, when the trial belongs to an arm
  std::string scheme;
  ExperimentKind kind = ExperimentKind::kCpa;
  std::string adversary;
  std::string public_key_digest;
  std::vector<QueryRecord> queries;
  std::vector<TimingView> timing_views;
  std::optional<std::string> m0_hex;
  std::optional<std::string> m1_hex;
  bool challenge_verified = false;  // |m0| = |m1| and m0 != m1 checked
  std::optional<std::string> c_star_digest;
  std::optional<int> guess;
  bool win = false;
  int b = 0;
  std::optional<FaultRecord> fault;
  nlohmann::json adversary_notes;

  // Experiment(b) output; a faulted trial outputs 0.
  int experiment_output() const { return fault ? 0 : guess.value_or(0); }
};

template <Cryptosystem S>
class AdversaryView;

template <Cryptosystem S>
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  virtual Requirements requirements() const = 0;
  virtual PlaintextPair<S> choose_plaintexts(AdversaryView<S>& view) = 0;
  virtual int guess(const typename S::Ciphertext& c_star, AdversaryView<S>& view) = 0;
  // Free-form diagnostics copied into the transcript.
  virtual nlohmann::json notes() const { return nullptr; }
};

template <Cryptosystem S>
using AdversaryFactory = std::function<std::unique_ptr<Adversary<S>>()>;

namespace internal {

template <Cryptosystem S>
class TrialDriver;

}  // namespace internal

// Everything an adversary may touch: the public algorithms, the public key,
// the decryption oracle, the timing feed (empty unless the experiment shows
// timing), the public delay model and its own random stream. The secret key
// and the challenge bit stay inside the trial driver.
template <Cryptosystem S>
class AdversaryView {
 public:
  const S& scheme() const;
  const typename S::PublicKey& public_key() const;
  OracleAnswer<S> decrypt(const typename S::Ciphertext& c);
  std::span<const TimingView> timing_feed() const;
  const DelayModel& delay_model() const;
  Phase phase() const;
  Rng& rng() { return rng_; }

 private:
  friend class internal::TrialDriver<S>;
  AdversaryView(internal::TrialDriver<S>& driver, Rng rng) : driver_(&driver), rng_(std::move(rng)) {}

  internal::TrialDriver<S>* driver_;
  Rng rng_;
};

struct TrialOptions {
  std::size_t trial_index = 0;
  bool wall_clock = false;
};

namespace internal {

template <Cryptosystem S>
class TrialDriver {
 public:
  TrialDriver(ExperimentKind kind, const S& scheme, std::optional<int> forced_b,
              std::uint64_t trial_seed, const DelayModel& delay, const TrialOptions& options)
      : scheme_(scheme),
        policy_(policy_for(kind)),
        delay_(delay),
        options_(options),
        challenger_rng_(derive_seed(trial_seed, {1})) {
    delay_.jitter_seed = derive_seed(delay.jitter_seed, {trial_seed});
    transcript_.trial_index = options.trial_index;
    transcript_.arm = forced_b;
    transcript_.scheme = scheme.name();
    transcript_.kind = kind;
    state_.keys = scheme.keygen(challenger_rng_);
    state_.b = forced_b ? *forced_b : random_bit(challenger_rng_);
    if (state_.b != 0 && state_.b != 1) throw DomainError("run_trial: forced bit must be 0 or 1");
    transcript_.public_key_digest = sha256_hex(scheme.encode_public_key(state_.keys.pk));
  }

  Transcript run(Adversary<S>& adversary, std::uint64_t trial_seed) {
    transcript_.adversary = adversary.name();
    AdversaryView<S> view(*this, Rng(derive_seed(trial_seed, {2})));
    try {
      const PlaintextPair<S> pair = adversary.choose_plaintexts(view);
      check_fault();
      issue_challenge(pair);
      const int guess = adversary.guess(*state_.c_star, view);
      check_fault();
      if (guess != 0 && guess != 1) throw InvalidChallenge("guess must be 0 or 1");
      transcript_.guess = guess;
    } catch (const GameFault& fault) {
      record_fault(fault);
    }
    if (overflow_) std::rethrow_exception(overflow_);
    state_.phase = Phase::kFinished;
    transcript_.adversary_notes = adversary.notes();
    transcript_.win = !transcript_.fault && transcript_.guess == state_.b;
    transcript_.b = state_.b;
    return std::move(transcript_);
  }

  OracleAnswer<S> answer(const typename S::Ciphertext& c) {
    const Bytes wire = scheme_.encode_ciphertext(c);
    QueryRecord record{state_.phase, sha256_hex(wire), std::nullopt, std::nullopt};
    OracleAnswer<S> answer;
    try {
      CostLedger ledger;
      const auto start = std::chrono::steady_clock::now();
      answer = oracle_decrypt(scheme_, state_, policy_, c, ledger);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      if (answer.plaintext) record.plaintext_hex = to_hex(scheme_.encode_plaintext(*answer.plaintext));
      if (answer.timing) {
        const std::size_t reply = answer.plaintext ? scheme_.encode_plaintext(*answer.plaintext).size() : 0;
        answer.timing->network_delay_out = network_delay(delay_, wire.size(), message_index_++);
        answer.timing->network_delay_back = network_delay(delay_, reply, message_index_++);
        if (options_.wall_clock) answer.timing->wall_ns = wall_ns(elapsed);
        feed_.push_back(*answer.timing);
      }
    } catch (const GameFault& fault) {
      record.fault = fault.kind();
      transcript_.queries.push_back(std::move(record));
      if (!sticky_fault_) sticky_fault_ = FaultRecord{fault.kind(), fault.what()};
      throw;
    } catch (const BudgetOverflow&) {
      overflow_ = std::current_exception();
      throw;
    }
    transcript_.queries.push_back(std::move(record));
    return answer;
  }

  const S& scheme() const { return scheme_; }
  const typename S::PublicKey& public_key() const { return state_.keys.pk; }
  std::span<const TimingView> feed() const { return feed_; }
  const DelayModel& delay() const { return delay_; }
  Phase phase() const { return state_.phase; }
  const std::vector<TimingView>& timing_views() const { return feed_; }

 private:
  static std::uint64_t wall_ns(std::chrono::steady_clock::duration d) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(d).count());
  }

  // A fault the adversary swallowed still ends the trial.
  void check_fault() {
    if (sticky_fault_) throw GameFault(sticky_fault_->kind, sticky_fault_->message);
  }

  void record_fault(const GameFault& fault) {
    transcript_.fault = sticky_fault_ ? *sticky_fault_ : FaultRecord{fault.kind(), fault.what()};
  }

  void issue_challenge(const PlaintextPair<S>& pair) {
    const auto space = scheme_.message_space(state_.keys.pk);
    const Bytes e0 = scheme_.encode_plaintext(pair.m0);
    const Bytes e1 = scheme_.encode_plaintext(pair.m1);
    transcript_.m0_hex = to_hex(e0);
    transcript_.m1_hex = to_hex(e1);
    if (!space.contains(pair.m0) || !space.contains(pair.m1)) {
      throw InvalidChallenge("challenge plaintexts must lie in the message space");
    }
    if (space.length(pair.m0) != space.length(pair.m1)) {
      throw InvalidChallenge("challenge plaintexts must have equal length");
    }
    if (pair.m0 == pair.m1) throw InvalidChallenge("challenge plaintexts must differ");
    transcript_.challenge_verified = true;

    state_.phase = Phase::kChallenge;
    CostLedger ledger;
    const auto start = std::chrono::steady_clock::now();
    try {
      state_.c_star = scheme_.encrypt(state_.keys.pk, state_.b == 0 ? pair.m0 : pair.m1,
                                      challenger_rng_, ledger);
    } catch (const BudgetOverflow&) {
      overflow_ = std::current_exception();
      throw;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const Bytes wire = scheme_.encode_ciphertext(*state_.c_star);
    transcript_.c_star_digest = sha256_hex(wire);
    if (policy_.timing_visible) {
      TimingView view;
      view.op_kind = OpKind::kEncrypt;
      view.compute_cost = ledger.total();
      view.network_delay_out = network_delay(delay_, e0.size() + e1.size(), message_index_++);
      view.network_delay_back = network_delay(delay_, wire.size(), message_index_++);
      view.phase = Phase::kChallenge;
      if (options_.wall_clock) view.wall_ns = wall_ns(elapsed);
      feed_.push_back(view);
    }
    state_.phase = Phase::kPhase2;
  }

  const S& scheme_;
  OraclePolicy policy_;
  DelayModel delay_;
  TrialOptions options_;
  Rng challenger_rng_;
  ChallengerState<S> state_;
  Transcript transcript_;
  std::vector<TimingView> feed_;
  std::uint64_t message_index_ = 0;
  std::optional<FaultRecord> sticky_fault_;
  std::exception_ptr overflow_;
};

}  // namespace internal

template <Cryptosystem S>
const S& AdversaryView<S>::scheme() const { return driver_->scheme(); }

template <Cryptosystem S>
const typename S::PublicKey& AdversaryView<S>::public_key() const { return driver_->public_key(); }

template <Cryptosystem S>
OracleAnswer<S> AdversaryView<S>::decrypt(const typename S::Ciphertext& c) { return driver_->answer(c); }

template <Cryptosystem S>
std::span<const TimingView> AdversaryView<S>::timing_feed() const { return driver_->feed(); }

template <Cryptosystem S>
const DelayModel& AdversaryView<S>::delay_model() const { return driver_->delay(); }

template <Cryptosystem S>
Phase AdversaryView<S>::phase() const { return driver_->phase(); }

// One game: keygen, phase 1, challenge on m_b, phase 2, guess. b is
// `forced_b` when given, otherwise a coin flip from the trial stream. Game
// faults end the trial and are recorded; BudgetOverflow propagates.
template <Cryptosystem S>
Transcript run_trial(ExperimentKind kind, const S& scheme, const AdversaryFactory<S>& factory,
                     std::optional<int> forced_b, std::uint64_t trial_seed,
                     const DelayModel& delay, const TrialOptions& options = {}) {
  std::unique_ptr<Adversary<S>> adversary = factory();
  check_pairing(kind, adversary->requirements(), adversary->name());
  internal::TrialDriver<S> driver(kind, scheme, forced_b, trial_seed, delay, options);
  Transcript t = driver.run(*adversary, trial_seed);
  t.timing_views = driver.timing_views();
  return t;
}

struct ArmCounts {
  std::size_t trials = 0;
  std::size_t ones = 0;    // trials whose experiment output is 1
  std::size_t wins = 0;
  std::size_t faults = 0;

  void add(const Transcript& t) {
    ++trials;
    ones += static_cast<std::size_t>(t.experiment_output());
    wins += t.win ? 1 : 0;
    faults += t.fault ? 1 : 0;
  }
};

struct Interval {
  double lo = 0;
  double hi = 0;
};

inline constexpr double kZ95 = 1.959963984540054;

inline Interval wilson_interval(std::size_t successes, std::size_t n, double z = kZ95) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct AdvantageEstimate {
  double p_exp0 = 0;
  double p_exp1 = 0;
  double advantage = 0;
  double ci95_halfwidth = 0;
  double negligible_threshold = 0.05;
  double win_rate = 0;  // faults count as losses
  std::size_t trials_arm0 = 0;
  std::size_t trials_arm1 = 0;
  std::size_t faults = 0;
};

inline constexpr double kDefaultNegligibleThreshold = 0.05;

// |Pr[Exp(0)=1] - Pr[Exp(1)=1]| with a Newcombe hybrid-score 95% interval for
// the difference, built from the per-arm Wilson intervals.
inline AdvantageEstimate estimate_advantage(const ArmCounts& arm0, const ArmCounts& arm1,
                                            double threshold = kDefaultNegligibleThreshold) {
  if (arm0.trials == 0 || arm1.trials == 0) throw DomainError("estimate_advantage: empty arm");
  AdvantageEstimate est;
  est.trials_arm0 = arm0.trials;
  est.trials_arm1 = arm1.trials;
  est.p_exp0 = static_cast<double>(arm0.ones) / static_cast<double>(arm0.trials);
  est.p_exp1 = static_cast<double>(arm1.ones) / static_cast<double>(arm1.trials);
  est.advantage = std::fabs(est.p_exp0 - est.p_exp1);
  const Interval w0 = wilson_interval(arm0.ones, arm0.trials);
  const Interval w1 = wilson_interval(arm1.ones, arm1.trials);
  const double below = std::sqrt(std::pow(est.p_exp0 - w0.lo, 2) + std::pow(w1.hi - est.p_exp1, 2));
  const double above = std::sqrt(std::pow(w0.hi - est.p_exp0, 2) + std::pow(est.p_exp1 - w1.lo, 2));
  est.ci95_halfwidth = std::max(below, above);
  est.negligible_threshold = threshold;
  est.win_rate = static_cast<double>(arm0.wins + arm1.wins) /
                 static_cast<double>(arm0.trials + arm1.trials);
  est.faults = arm0.faults + arm1.faults;
  return est;
}

enum class Verdict { kConsistentWithNegligible, kAdvantageDetected, kInconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kConsistentWithNegligible: return "consistent-with-negligible";
    case Verdict::kAdvantageDetected: return "advantage-detected";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

inline Verdict negligible_check(const AdvantageEstimate& est) {
  if (est.advantage - est.ci95_halfwidth > est.negligible_threshold) return Verdict::kAdvantageDetected;
  if (est.advantage + est.ci95_halfwidth <= est.negligible_threshold) {
    return Verdict::kConsistentWithNegligible;
  }
  return Verdict::kInconclusive;
}

struct ExperimentOptions {
  std::size_t trials_per_arm = 1000;
  std::uint64_t master_seed = 0;
  DelayModel delay;
  double negligible_threshold = kDefaultNegligibleThreshold;
  unsigned threads = 1;
  bool wall_clock = false;
};

struct ExperimentResult {
  ExperimentKind kind = ExperimentKind::kCpa;
  std::string scheme;
  std::string adversary;
  AdvantageEstimate estimate;
  ArmCounts arm0;
  ArmCounts arm1;
  bool all_trials_faulted = false;
  std::vector<std::string> warnings;
  std::vector<Transcript> transcripts;  // arm 0 then arm 1, by trial index
};

inline std::uint64_t trial_seed(std::uint64_t master_seed, int arm, std::size_t index) {
  return derive_seed(master_seed, {static_cast<std::uint64_t>(arm), index});
}

// Two-arm experiment: trials_per_arm trials with b forced to 0 and as many
// with b forced to 1. Each trial's randomness depends only on (master_seed,
// arm, index), so the result does not depend on scheduling.
template <Cryptosystem S>
ExperimentResult run_experiment(ExperimentKind kind, const S& scheme,
                                const AdversaryFactory<S>& factory,
                                const ExperimentOptions& options) {
  if (options.trials_per_arm < 1) throw DomainError("run_experiment: trials_per_arm must be >= 1");
  ExperimentResult result;
  result.kind = kind;
  result.scheme = scheme.name();
  {
    const auto probe = factory();
    result.adversary = probe->name();
    result.warnings = check_pairing(kind, probe->requirements(), probe->name());
  }

  const std::size_t total = 2 * options.trials_per_arm;
  result.transcripts.resize(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t slot = next++; slot < total; slot = next++) {
      const int arm = slot < options.trials_per_arm ? 0 : 1;
      const std::size_t index = slot % options.trials_per_arm;
      try {
        result.transcripts[slot] =
            run_trial(kind, scheme, factory, arm, trial_seed(options.master_seed, arm, index),
                      options.delay, TrialOptions{index, options.wall_clock});
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t slot = 0; slot < total; ++slot) {
    (slot < options.trials_per_arm ? result.arm0 : result.arm1).add(result.transcripts[slot]);
  }
  result.estimate = estimate_advantage(result.arm0, result.arm1, options.negligible_threshold);
  result.all_trials_faulted = result.estimate.faults == total;
  return result;
}

inline nlohmann::ordered_json to_json(const TimingView& v) {
  nlohmann::ordered_json j;
  j["op_kind"] = to_string(v.op_kind);
  j["compute_cost"] = v.compute_cost;
  j["network_delay_out"] = v.network_delay_out;
  j["network_delay_back"] = v.network_delay_back;
  j["phase"] = to_string(v.phase);
  if (v.wall_ns) j["wall_ns"] = *v.wall_ns;
  return j;
}

inline nlohmann::ordered_json to_json(const Transcript& t) {
  nlohmann::ordered_json j;
  j["trial_index"] = t.trial_index;
  j["arm"] = t.arm ? nlohmann::ordered_json(*t.arm) : nlohmann::ordered_json(nullptr);
  j["scheme"] = t.scheme;
  j["experiment"] = to_string(t.kind);
  j["adversary"] = t.adversary;
  j["public_key_digest"] = t.public_key_digest;
  auto& queries = j["queries"] = nlohmann::ordered_json::array();
  for (const QueryRecord& q : t.queries) {
    nlohmann::ordered_json qj;
    qj["phase"] = to_string(q.phase);
    qj["ciphertext_digest"] = q.ciphertext_digest;
    if (q.fault) {
      qj["result"] = "fault:" + *q.fault;
    } else if (q.plaintext_hex) {
      qj["result"] = *q.plaintext_hex;
    } else {
      qj["result"] = "reject";
    }
    queries.push_back(std::move(qj));
  }
  auto& views = j["timing_views"] = nlohmann::ordered_json::array();
  for (const TimingView& v : t.timing_views) views.push_back(to_json(v));
  j["m0"] = t.m0_hex ? nlohmann::ordered_json(*t.m0_hex) : nlohmann::ordered_json(nullptr);
  j["m1"] = t.m1_hex ? nlohmann::ordered_json(*t.m1_hex) : nlohmann::ordered_json(nullptr);
  j["challenge_verified"] = t.challenge_verified;
  j["c_star_digest"] = t.c_star_digest ? nlohmann::ordered_json(*t.c_star_digest) : nlohmann::ordered_json(nullptr);
  j["guess"] = t.guess ? nlohmann::ordered_json(*t.guess) : nlohmann::ordered_json(nullptr);
  if (t.fault) {
    j["fault"] = {{"kind", t.fault->kind}, {"message", t.fault->message}};
  } else {
    j["fault"] = nullptr;
  }
  j["adversary_notes"] = nlohmann::ordered_json(t.adversary_notes);
  j["win"] = t.win;
  j["b"] = t.b;
  return j;
}

inline nlohmann::ordered_json to_json(const AdvantageEstimate& e) {
  nlohmann::ordered_json j;
  j["p_exp0"] = e.p_exp0;
  j["p_exp1"] = e.p_exp1;
  j["advantage"] = e.advantage;
  j["ci95_halfwidth"] = e.ci95_halfwidth;
  j["negligible_threshold"] = e.negligible_threshold;
  j["win_rate"] = e.win_rate;
  j["trials_arm0"] = e.trials_arm0;
  j["trials_arm1"] = e.trials_arm1;
  j["faults"] = e.faults;
  j["verdict"] = to_string(negligible_check(e));
  return j;
}

inline nlohmann::ordered_json to_json(const OraclePolicy& p) {
  return {{"phase1_decrypt_allowed", p.phase1_decrypt_allowed},
          {"phase2_decrypt_allowed", p.phase2_decrypt_allowed},
          {"challenge_ciphertext_forbidden", p.challenge_ciphertext_forbidden},
          {"timing_visible", p.timing_visible}};
}

inline nlohmann::ordered_json to_json(const DelayModel& d) {
  return {{"base", d.base}, {"per_byte", d.per_byte}, {"jitter_seed", d.jitter_seed},
          {"jitter_max", d.jitter_max}};
}

// Transcript store for one experiment: header, per-trial records, estimate.
inline nlohmann::ordered_json transcript_document(const ExperimentResult& r,
                                                  const ExperimentOptions& options) {
  nlohmann::ordered_json header;
  header["scheme"] = r.scheme;
  header["experiment"] = to_string(r.kind);
  header["adversary"] = r.adversary;
  header["policy"] = to_json(policy_for(r.kind));
  header["trials_per_arm"] = options.trials_per_arm;
  header["master_seed"] = options.master_seed;
  header["delay_model"] = to_json(options.delay);
  header["warnings"] = r.warnings;
  header["all_trials_faulted"] = r.all_trials_faulted;
  nlohmann::ordered_json doc;
  doc["header"] = std::move(header);
  auto& trials = doc["trials"] = nlohmann::ordered_json::array();
  for (const Transcript& t : r.transcripts) trials.push_back(to_json(t));
  doc["estimate"] = to_json(r.estimate);
  return doc;
}

}  // namespace cca2ta

#endif  // CCA2TA_GAMES_HPP_
