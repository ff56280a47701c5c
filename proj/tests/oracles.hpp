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

// Independent reference computations for the unit and acceptance tests. They
// work on plain 64-bit integers and brute force, sharing no code path with
// the library.

#ifndef CCA2TA_TESTS_ORACLES_HPP_
#define CCA2TA_TESTS_ORACLES_HPP_

#include <cstdint>
#include <vector>

namespace cca2ta::oracle {

// base^exp mod n by exp repeated multiplications.
inline std::uint64_t naive_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t acc = 1 % n;
  for (std::uint64_t i = 0; i < exp; ++i) acc = acc * (base % n) % n;
  return acc;
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Legendre symbol by scanning all squares mod p.
inline int legendre_by_table(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

// Jacobi symbol as the product of Legendre symbols over the factorisation.
inline int jacobi_by_factoring(std::uint64_t a, std::uint64_t n) {
  int result = 1;
  std::uint64_t m = n;
  for (std::uint64_t p = 3; p * p <= m; p += 2) {
    while (m % p == 0) {
      result *= legendre_by_table(a, p);
      m /= p;
    }
  }
  if (m > 1) result *= legendre_by_table(a, m);
  return result;
}

inline std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p) {
  std::uint64_t x = g % p;
  for (std::uint64_t k = 1; k < p; ++k) {
    if (x == 1) return k;
    x = x * g % p;
  }
  return 0;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace cca2ta::oracle

#endif  // CCA2TA_TESTS_ORACLES_HPP_
