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

#ifndef CCA2TA_COST_LEDGER_HPP_
#define CCA2TA_COST_LEDGER_HPP_

#include <cstdint>

namespace cca2ta {

using Units = std::uint64_t;

// Deterministic abstract-time accounting. One unit per modular
// multiplication or squaring, one per data-dependent branch step, and one per
// padding step added by fixed-time wrappers. Counters only ever grow.
//
// Ledgers are caller-owned and must not be shared between concurrent calls.
class CostLedger {
 public:
  void charge_modmul(Units n = 1) { modmul_count_ += n; }
  void charge_branch(Units n = 1) { branch_count_ += n; }
  void charge_padding(Units n) { padding_count_ += n; }

  // Adds every counter of `other` into this ledger.
  void absorb(const CostLedger& other) {
    modmul_count_ += other.modmul_count_;
    branch_count_ += other.branch_count_;
    padding_count_ += other.padding_count_;
  }

  Units modmul_count() const { return modmul_count_; }
  Units branch_count() const { return branch_count_; }
  Units padding_count() const { return padding_count_; }
  Units total() const { return modmul_count_ + branch_count_ + padding_count_; }

  friend bool operator==(const CostLedger&, const CostLedger&) = default;

 private:
  Units modmul_count_ = 0;
  Units branch_count_ = 0;
  Units padding_count_ = 0;
};

}  // namespace cca2ta

#endif  // CCA2TA_COST_LEDGER_HPP_
