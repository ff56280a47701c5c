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

#ifndef CCA2TA_ERRORS_HPP_
#define CCA2TA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cca2ta {

// Precondition violations on arithmetic and scheme inputs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A bounded search (prime, generator, pseudo-square) ran out of attempts.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fixed-time wrapped call needed more units than its budget.
class BudgetOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adversary/experiment combination that cannot be run at all.
class IncompatiblePairing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Faults raised inside a game trial. They abort the trial and are recorded in
// its transcript; they never abort an experiment.
class GameFault : public std::runtime_error {
 public:
  GameFault(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class PolicyViolation : public GameFault {
 public:
  explicit PolicyViolation(const std::string& what)
      : GameFault("policy-violation", what) {}
};

class ForbiddenQuery : public GameFault {
 public:
  explicit ForbiddenQuery(const std::string& what)
      : GameFault("forbidden-query", what) {}
};

class InvalidChallenge : public GameFault {
 public:
  explicit InvalidChallenge(const std::string& what)
      : GameFault("invalid-challenge", what) {}
};

}  // namespace cca2ta

#endif  // CCA2TA_ERRORS_HPP_
