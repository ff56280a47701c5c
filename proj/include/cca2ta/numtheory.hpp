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

#ifndef CCA2TA_NUMTHEORY_HPP_
#define CCA2TA_NUMTHEORY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/errors.hpp"
#include "cca2ta/natural.hpp"

namespace cca2ta {

inline constexpr int kDefaultMillerRabinRounds = 20;

namespace internal {

inline void check_modulus(const Natural& n, const char* op) {
  if (n < 2) throw DomainError(std::string(op) + ": modulus must be >= 2");
}

inline void check_residue(const Natural& a, const Natural& n, const char* op) {
  if (is_negative(a) || a >= n) {
    throw DomainError(std::string(op) + ": operand must lie in [0, n)");
  }
}

}  // namespace internal

// a * b mod n. Charges exactly one modmul unit.
inline Natural mod_mul(const Natural& a, const Natural& b, const Natural& n,
                       CostLedger& ledger) {
  internal::check_modulus(n, "mod_mul");
  internal::check_residue(a, n, "mod_mul");
  internal::check_residue(b, n, "mod_mul");
  ledger.charge_modmul();
  return (a * b) % n;
}

// Left-to-right square-and-multiply. The multiply step runs only for set
// exponent bits, so the cost is (bitlen(exp) - 1) + (popcount(exp) - 1)
// modmul units for exp >= 1 and zero for exp == 0.
inline Natural mod_pow_leaky(const Natural& base, const Natural& exp,
                             const Natural& n, CostLedger& ledger) {
  internal::check_modulus(n, "mod_pow_leaky");
  internal::check_residue(base, n, "mod_pow_leaky");
  if (is_negative(exp)) throw DomainError("mod_pow_leaky: negative exponent");
  if (exp.is_zero()) return Natural(1);
  const std::size_t len = bit_length(exp);
  Natural acc = base;
  for (std::size_t i = len - 1; i-- > 0;) {
    acc = mod_mul(acc, acc, n, ledger);
    if (bit_test(exp, i)) acc = mod_mul(acc, base, n, ledger);
  }
  return acc;
}

// Montgomery ladder over a fixed width. Every step performs one multiply and
// one squaring whatever the exponent bit, so the cost is always 2 * width
// modmul units. `width` defaults to the bit length of the modulus.
inline Natural mod_pow_ladder(const Natural& base, const Natural& exp,
                              const Natural& n, CostLedger& ledger,
                              std::optional<std::size_t> width = std::nullopt) {
  internal::check_modulus(n, "mod_pow_ladder");
  internal::check_residue(base, n, "mod_pow_ladder");
  if (is_negative(exp)) throw DomainError("mod_pow_ladder: negative exponent");
  const std::size_t w = width.value_or(bit_length(n));
  if (bit_length(exp) > w) {
    throw DomainError("mod_pow_ladder: exponent wider than ladder width");
  }
  Natural r0 = 1;
  Natural r1 = base;
  for (std::size_t i = w; i-- > 0;) {
    if (bit_test(exp, i)) {
      r0 = mod_mul(r0, r1, n, ledger);
      r1 = mod_mul(r1, r1, n, ledger);
    } else {
      r1 = mod_mul(r0, r1, n, ledger);
      r0 = mod_mul(r0, r0, n, ledger);
    }
  }
  return r0;
}

// Jacobi symbol (a/n) for odd n >= 3 via quadratic reciprocity.
inline int jacobi(const Natural& a, const Natural& n) {
  if (n < 3 || !bit_test(n, 0)) throw DomainError("jacobi: n must be odd and >= 3");
  if (is_negative(a)) throw DomainError("jacobi: negative numerator");
  Natural x = a % n;
  Natural y = n;
  int result = 1;
  while (!x.is_zero()) {
    while (!bit_test(x, 0)) {
      x >>= 1;
      const unsigned y_mod_8 = static_cast<unsigned>(y & 7);
      if (y_mod_8 == 3 || y_mod_8 == 5) result = -result;
    }
    std::swap(x, y);
    if ((x & 3) == 3 && (y & 3) == 3) result = -result;
    x %= y;
  }
  return y == 1 ? result : 0;
}

namespace internal {

inline constexpr std::array<unsigned, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Plain modular power for primality testing; not ledgered.
inline Natural pow_mod(const Natural& base, const Natural& exp, const Natural& n) {
  return boost::multiprecision::powm(base, exp, n);
}

}  // namespace internal

// Miller-Rabin with `rounds` random witnesses drawn from `rng`.
inline bool is_probable_prime(const Natural& n, int rounds, Rng& rng) {
  if (n < 2) throw DomainError("is_probable_prime: n must be >= 2");
  if (rounds < 1) throw DomainError("is_probable_prime: rounds must be >= 1");
  for (unsigned p : internal::kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Natural d = n - 1;
  std::size_t s = 0;
  while (!bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  const Natural n_minus_one = n - 1;
  for (int round = 0; round < rounds; ++round) {
    const Natural a = random_range(2, n - 2, rng);
    Natural x = internal::pow_mod(a, d, n);
    if (x == 1 || x == n_minus_one) continue;
    bool composite = true;
    for (std::size_t r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n_minus_one) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool is_probable_prime(const Natural& n, Rng& rng) {
  return is_probable_prime(n, kDefaultMillerRabinRounds, rng);
}

// Requires value ≡ residue (mod modulus).
struct Congruence {
  unsigned residue = 0;
  unsigned modulus = 1;
};

// Random probable prime of exactly `bits` bits, optionally restricted to a
// residue class. Gives up after a bounded number of candidates.
inline Natural gen_prime(std::size_t bits, std::optional<Congruence> congruence,
                         Rng& rng) {
  if (bits < 2) throw DomainError("gen_prime: bits must be >= 2");
  if (congruence && congruence->modulus == 0) {
    throw DomainError("gen_prime: zero congruence modulus");
  }
  const std::size_t attempts = std::max<std::size_t>(4096, 256 * bits);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    Natural candidate = random_bits(bits, rng);
    boost::multiprecision::bit_set(candidate, static_cast<unsigned>(bits - 1));
    if (bits > 2) boost::multiprecision::bit_set(candidate, 0);
    if (congruence && candidate % congruence->modulus != congruence->residue) continue;
    if (is_probable_prime(candidate, rng)) return candidate;
  }
  throw SearchExhausted("gen_prime: no " + std::to_string(bits) +
                        "-bit prime found satisfying the requested condition");
}

}  // namespace cca2ta

#endif  // CCA2TA_NUMTHEORY_HPP_
