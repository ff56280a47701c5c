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

#include <cstdint>
#include <set>

#include "cca2ta/digest.hpp"
#include "cca2ta/numtheory.hpp"
#include "cca2ta/serialization.hpp"
#include "oracles.hpp"

namespace cca2ta {
namespace {

std::uint64_t u64(const Natural& n) { return static_cast<std::uint64_t>(n); }

TEST(ModMul, SmallExamplesAgreeWithPlainArithmetic) {
  struct Case { std::uint64_t a, b, n, expected; };
  for (const Case& c : {Case{3, 4, 21, 12}, Case{0, 5, 7, 0}, Case{20, 20, 21, 1}}) {
    ASSERT_EQ(c.a * c.b % c.n, c.expected);
    CostLedger ledger;
    EXPECT_EQ(u64(mod_mul(c.a, c.b, c.n, ledger)), c.expected);
    EXPECT_EQ(ledger.modmul_count(), 1U);
    EXPECT_EQ(ledger.total(), 1U);
  }
}

TEST(ModMul, RejectsBadModulusAndUnreducedOperands) {
  CostLedger ledger;
  EXPECT_THROW(mod_mul(0, 0, 1, ledger), DomainError);
  EXPECT_THROW(mod_mul(0, 0, 0, ledger), DomainError);
  EXPECT_THROW(mod_mul(7, 1, 7, ledger), DomainError);
  EXPECT_THROW(mod_mul(1, 9, 7, ledger), DomainError);
  EXPECT_THROW(mod_mul(Natural(-1), 1, 7, ledger), DomainError);
  EXPECT_EQ(ledger.total(), 0U);
}

TEST(ModPowLeaky, ZeroExponentCostsNothing) {
  CostLedger ledger;
  EXPECT_EQ(mod_pow_leaky(3, 0, 7, ledger), 1);
  EXPECT_EQ(ledger.total(), 0U);
}

TEST(ModPowLeaky, CostIsSquaringsPlusExtraMultiplies) {
  // 10 = 0b1010: three squarings, one extra multiply.
  CostLedger ledger;
  EXPECT_EQ(oracle::naive_pow(2, 10, 1000), 24U);
  EXPECT_EQ(mod_pow_leaky(2, 10, 1000, ledger), 24);
  EXPECT_EQ(ledger.total(), 4U);
}

TEST(ModPowLeaky, FermatExample) {
  CostLedger ledger;
  EXPECT_EQ(oracle::naive_pow(5, 117, 19), 1U);
  EXPECT_EQ(mod_pow_leaky(5, 117, 19, ledger), 1);
  // 117 = 0b1110101: 6 squarings and 4 multiplies.
  EXPECT_EQ(ledger.total(), 10U);
}

TEST(ModPowLadder, CostDependsOnlyOnWidth) {
  for (std::uint64_t e : {10U, 255U, 0U, 1U, 128U}) {
    CostLedger ledger;
    EXPECT_EQ(u64(mod_pow_ladder(2, e, 1000, ledger, 8)), oracle::naive_pow(2, e, 1000)) << e;
    EXPECT_EQ(ledger.total(), 16U) << e;
  }
  CostLedger ledger;
  EXPECT_EQ(mod_pow_ladder(3, 0, 7, ledger, 8), 1);
  EXPECT_EQ(ledger.total(), 16U);
}

TEST(ModPowLadder, DefaultWidthIsModulusBitLength) {
  CostLedger ledger;
  EXPECT_EQ(mod_pow_ladder(2, 10, 1000, ledger), 24);
  EXPECT_EQ(ledger.total(), 20U);
}

TEST(ModPowLadder, RejectsExponentWiderThanWidth) {
  CostLedger ledger;
  EXPECT_THROW(mod_pow_ladder(2, 256, 1000, ledger, 8), DomainError);
}

TEST(ModPow, LeakyLadderAndNaiveAgreeOnRandomInputs) {
  Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = 2 + rng() % 5000;
    const std::uint64_t base = rng() % n;
    const std::uint64_t exp = rng() % 600;
    const std::uint64_t expected = oracle::naive_pow(base, exp, n);
    CostLedger a, b;
    ASSERT_EQ(u64(mod_pow_leaky(base, exp, n, a)), expected);
    ASSERT_EQ(u64(mod_pow_ladder(base, exp, n, b, 10)), expected);
    ASSERT_EQ(b.total(), 20U);
  }
}

TEST(Jacobi, ExamplesMatchLegendreProducts) {
  struct Case { std::uint64_t a, n; int expected; };
  for (const Case& c : {Case{1, 15, 1}, Case{2, 15, 1}, Case{5, 21, 1}, Case{2, 3, -1},
                        Case{3, 9, 0}, Case{7, 15, -1}}) {
    EXPECT_EQ(oracle::jacobi_by_factoring(c.a, c.n), c.expected);
    EXPECT_EQ(jacobi(c.a, c.n), c.expected) << c.a << "/" << c.n;
  }
}

TEST(Jacobi, RejectsEvenOrTinyModulus) {
  EXPECT_THROW(jacobi(3, 10), DomainError);
  EXPECT_THROW(jacobi(1, 1), DomainError);
  EXPECT_THROW(jacobi(1, 2), DomainError);
}

TEST(Jacobi, MatchesOracleExhaustivelyForSmallModuli) {
  for (std::uint64_t n = 3; n < 200; n += 2) {
    for (std::uint64_t a = 0; a < 2 * n; ++a) {
      ASSERT_EQ(jacobi(a, n), oracle::jacobi_by_factoring(a, n)) << a << "/" << n;
    }
  }
}

TEST(Jacobi, IsMultiplicativeAndSquaresAreNonNegative) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = 3 + 2 * (rng() % 5000);
    const std::uint64_t a = rng() % 100000;
    const std::uint64_t b = rng() % 100000;
    ASSERT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n));
    ASSERT_GE(jacobi(a * a, n), 0);
  }
}

TEST(MillerRabin, Examples) {
  Rng rng(1);
  EXPECT_TRUE(is_probable_prime(7, rng));
  EXPECT_FALSE(is_probable_prime(21, rng));
  EXPECT_TRUE(is_probable_prime(2147483647, rng));
  EXPECT_FALSE(is_probable_prime(561, rng));  // Carmichael
  EXPECT_TRUE(is_probable_prime(2, rng));
  EXPECT_THROW(is_probable_prime(1, rng), DomainError);
  EXPECT_THROW(is_probable_prime(7, 0, rng), DomainError);
}

TEST(MillerRabin, AgreesWithTrialDivision) {
  Rng rng(2);
  for (std::uint64_t n = 2; n < 20000; ++n) {
    ASSERT_EQ(is_probable_prime(n, rng), oracle::trial_division_prime(n)) << n;
  }
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = 2 + rng() % (std::uint64_t{1} << 40);
    ASSERT_EQ(is_probable_prime(n, rng), oracle::trial_division_prime(n)) << n;
  }
}

TEST(GenPrime, ThreeBitBlumPrimeIsSeven) {
  Rng rng(3);
  EXPECT_EQ(gen_prime(3, Congruence{3, 4}, rng), 7);
}

TEST(GenPrime, TwoBitPrimesAreTwoOrThree) {
  Rng rng(4);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 64; ++i) seen.insert(u64(gen_prime(2, std::nullopt, rng)));
  EXPECT_EQ(seen, (std::set<std::uint64_t>{2, 3}));
}

TEST(GenPrime, ExactBitLengthAndDeterministicPerSeed) {
  for (std::uint64_t seed : {1U, 2U, 3U}) {
    Rng a(seed), b(seed);
    const Natural p = gen_prime(16, std::nullopt, a);
    EXPECT_EQ(p, gen_prime(16, std::nullopt, b));
    EXPECT_EQ(bit_length(p), 16U);
    EXPECT_TRUE(oracle::trial_division_prime(u64(p)));
  }
}

TEST(GenPrime, HonoursCongruence) {
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const Natural p = gen_prime(20, Congruence{3, 4}, rng);
    ASSERT_EQ(u64(p) % 4, 3U);
    ASSERT_TRUE(oracle::trial_division_prime(u64(p)));
  }
}

TEST(GenPrime, ImpossibleRequestExhaustsSearch) {
  Rng rng(7);
  EXPECT_THROW(gen_prime(2, Congruence{1, 4}, rng), SearchExhausted);
}

TEST(Bytes, MinimalAndFixedWidthEncodings) {
  EXPECT_TRUE(to_bytes(0).empty());
  EXPECT_EQ(to_bytes(0x0102), (Bytes{1, 2}));
  EXPECT_EQ(to_bytes_fixed(0x0102, 4), (Bytes{0, 0, 1, 2}));
  EXPECT_THROW(to_bytes_fixed(0x010203, 2), DomainError);
  EXPECT_EQ(from_bytes(Bytes{0, 0, 1, 2}), 0x0102);
  EXPECT_EQ(to_hex(Natural(0xbeef)), "beef");
}

TEST(Serialization, RoundTripsRandomNaturals) {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    std::vector<Natural> values;
    const std::size_t count = rng() % 6;
    for (std::size_t k = 0; k < count; ++k) values.push_back(random_bits(rng() % 300, rng));
    const Natural single = random_bits(rng() % 100, rng);
    ByteWriter w("t");
    w.put_naturals(values).put_natural(single).put_string("x");
    const Bytes wire = std::move(w).bytes();
    ByteReader r(wire, "t");
    ASSERT_EQ(r.get_naturals(), values);
    ASSERT_EQ(r.get_natural(), single);
    ASSERT_EQ(r.get_string(), "x");
    r.expect_done();
  }
}

TEST(Serialization, RejectsMalformedInput) {
  ByteWriter w("t");
  w.put_natural(300);
  const Bytes wire = std::move(w).bytes();
  EXPECT_THROW(ByteReader(wire, "u"), DomainError);
  Bytes truncated(wire.begin(), wire.end() - 1);
  EXPECT_THROW(ByteReader(truncated, "t").get_natural(), DomainError);
  Bytes trailing = wire;
  trailing.push_back(0);
  ByteReader r(trailing, "t");
  r.get_natural();
  EXPECT_THROW(r.expect_done(), DomainError);
  ByteWriter padded("t");
  padded.put_u32(2);
  Bytes leading_zero = std::move(padded).bytes();
  leading_zero.push_back(0);
  leading_zero.push_back(5);
  EXPECT_THROW(ByteReader(leading_zero, "t").get_natural(), DomainError);
}

TEST(Digest, KnownVectors) {
  EXPECT_EQ(sha256_hex(std::string_view("")),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex(std::string_view("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Seeds, DerivedSeedsAreStableAndLabelSensitive) {
  EXPECT_EQ(derive_seed(1, {2, 3}), derive_seed(1, {2, 3}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
  EXPECT_NE(derive_seed(1, {0}), derive_seed(2, {0}));
}

}  // namespace
}  // namespace cca2ta
