// Copyright 2026 The ntruhe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ntruhe/rsa.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "ntruhe/errors.hpp"

namespace ntruhe::rsa {
namespace {

// Independent oracle: repeated multiplication.
std::uint64_t slow_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * b % m;
  return r;
}

TEST(RsaTest, WorkedExample) {
  const RsaKeys keys = keys_from_primes(17, 23);
  EXPECT_EQ(keys, (RsaKeys{391, 3, 59}));
  EXPECT_EQ(carmichael(17, 23), 176u);
  EXPECT_EQ(encrypt(keys, 11), 158u);
  EXPECT_EQ(encrypt(keys, 13), 242u);
  const std::vector<std::uint64_t> cs{158, 242};
  EXPECT_EQ(ct_mul(keys, cs), 309u);
  EXPECT_EQ(decrypt(keys, 309), 143u);
}

TEST(RsaTest, ModPowAgreesWithRepeatedMultiplication) {
  for (std::uint64_t b = 0; b < 40; ++b) {
    for (std::uint64_t e = 0; e < 70; ++e) {
      ASSERT_EQ(mod_pow(b, e, 391), slow_pow(b, e, 391));
    }
  }
  EXPECT_EQ(mod_pow(5, 0, 1), 0u);
}

TEST(RsaTest, FullRoundTripSmallModulus) {
  const RsaKeys keys = keys_from_primes(17, 23);
  for (std::uint64_t a = 0; a < keys.kappa; ++a) {
    ASSERT_EQ(decrypt(keys, encrypt(keys, a)), a);
  }
}

TEST(RsaTest, ExponentsAreInverse) {
  for (auto [p1, p2] : {std::pair<std::uint64_t, std::uint64_t>{17, 23},
                        {11, 13}, {3, 7}, {65521, 65537}}) {
    const RsaKeys keys = keys_from_primes(p1, p2);
    const std::uint64_t lambda = std::lcm(p1 - 1, p2 - 1);
    EXPECT_EQ(std::gcd(keys.xi, lambda), 1u);
    EXPECT_EQ(static_cast<unsigned __int128>(keys.xi) * keys.zeta % lambda, 1u);
  }
}

TEST(RsaTest, MultiplicativeHomomorphism) {
  SeededRandom rng(3);
  for (int k = 0; k < 20; ++k) {
    const RsaKeys keys = keygen(48, rng);
    for (int i = 0; i < 50; ++i) {
      const std::uint64_t a1 = rng.uniform(keys.kappa);
      const std::uint64_t a2 = rng.uniform(keys.kappa);
      const std::vector<std::uint64_t> cs{encrypt(keys, a1), encrypt(keys, a2)};
      const auto expect = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(a1) * a2 % keys.kappa);
      ASSERT_EQ(decrypt(keys, ct_mul(keys, cs)), expect);
    }
  }
}

TEST(RsaTest, Errors) {
  const RsaKeys keys = keys_from_primes(17, 23);
  EXPECT_THROW(encrypt(keys, 391), InvalidPlaintext);
  EXPECT_THROW(decrypt(keys, 400), InvalidCiphertext);
  EXPECT_THROW(ct_mul(keys, std::vector<std::uint64_t>{}), EmptyAggregate);
  EXPECT_THROW(keys_from_primes(15, 23), InvalidParameters);
  EXPECT_THROW(keys_from_primes(23, 23), InvalidParameters);
  SeededRandom rng(0);
  EXPECT_THROW(keygen(8, rng), InvalidParameters);
  EXPECT_THROW(keygen(65, rng), InvalidParameters);
}

}  // namespace
}  // namespace ntruhe::rsa
