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

#ifndef CCA2TA_NATURAL_HPP_
#define CCA2TA_NATURAL_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cca2ta/errors.hpp"

namespace cca2ta {

// Arbitrary-precision integer. Every Natural handed to the library must be
// non-negative; operations check this where it matters.
using Natural = boost::multiprecision::cpp_int;

using Bytes = std::vector<std::uint8_t>;

// All randomness flows through explicitly seeded 64-bit Mersenne Twister
// streams so every experiment is reproducible from its master seed.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent seed from a parent seed and a list of labels.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> labels) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t label : labels) h = mix64(h ^ mix64(label + 0x632be59bd9b4e019ULL));
  return h;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline bool is_negative(const Natural& n) { return n.sign() < 0; }

inline std::size_t bit_length(const Natural& n) {
  if (n.is_zero()) return 0;
  return boost::multiprecision::msb(n) + 1;
}

inline bool bit_test(const Natural& n, std::size_t i) {
  return boost::multiprecision::bit_test(n, static_cast<unsigned>(i));
}

inline std::size_t popcount(const Natural& n) {
  std::size_t count = 0;
  const std::size_t len = bit_length(n);
  for (std::size_t i = 0; i < len; ++i) count += bit_test(n, i) ? 1 : 0;
  return count;
}

inline std::size_t byte_length(const Natural& n) {
  return (bit_length(n) + 7) / 8;
}

// Minimal big-endian magnitude; zero encodes as the empty string.
inline Bytes to_bytes(const Natural& n) {
  if (is_negative(n)) throw DomainError("to_bytes: negative value");
  Bytes out;
  if (n.is_zero()) return out;
  boost::multiprecision::export_bits(n, std::back_inserter(out), 8, true);
  return out;
}

// Big-endian magnitude left-padded with zeros to exactly `width` bytes.
inline Bytes to_bytes_fixed(const Natural& n, std::size_t width) {
  Bytes raw = to_bytes(n);
  if (raw.size() > width) throw DomainError("to_bytes_fixed: value wider than field");
  Bytes out(width - raw.size(), 0);
  out.insert(out.end(), raw.begin(), raw.end());
  return out;
}

inline Natural from_bytes(std::span<const std::uint8_t> bytes) {
  Natural n = 0;
  if (bytes.empty()) return n;
  boost::multiprecision::import_bits(n, bytes.begin(), bytes.end(), 8, true);
  return n;
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

inline std::string to_hex(const Natural& n) { return to_hex(to_bytes(n)); }

// Uniform integer with exactly `bits` random bits (top bit not forced).
inline Natural random_bits(std::size_t bits, Rng& rng) {
  Natural n = 0;
  std::size_t remaining = bits;
  while (remaining > 0) {
    const std::size_t take = remaining < 64 ? remaining : 64;
    std::uint64_t word = rng();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    n <<= take;
    n |= word;
    remaining -= take;
  }
  return n;
}

// Uniform in [0, bound) by rejection sampling.
inline Natural random_below(const Natural& bound, Rng& rng) {
  if (bound <= 0) throw DomainError("random_below: bound must be positive");
  const std::size_t bits = bit_length(bound);
  for (;;) {
    Natural candidate = random_bits(bits, rng);
    if (candidate < bound) return candidate;
  }
}

// Uniform in [lo, hi].
inline Natural random_range(const Natural& lo, const Natural& hi, Rng& rng) {
  if (hi < lo) throw DomainError("random_range: empty range");
  return lo + random_below(hi - lo + 1, rng);
}

inline int random_bit(Rng& rng) { return static_cast<int>(rng() & 1U); }

inline Natural gcd(const Natural& a, const Natural& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace cca2ta

#endif  // CCA2TA_NATURAL_HPP_
