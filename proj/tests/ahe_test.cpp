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

#include "ntruhe/ahe.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ntruhe/errors.hpp"
#include "ntruhe/testing.hpp"
#include "test_util.hpp"

namespace ntruhe {
namespace {

const RingParams kParams(7, 3, 128);
const SamplingSpec kSpec{2, 2, 2};
const Poly kF{1, -1, 1, 0, 0, -1, 1};
const Poly kG{-1, 1, -1, 1, 0, 0, 0};
const Poly kC1{98, 18, 58, 119, 126, 82, 13};
const Poly kC2{20, 52, 123, 123, 85, 16, 94};

KeyPair scripted_keys() {
  ScriptedRandom rng;
  rng.push_poly(kF).push_poly(kG);
  return keygen(kParams, kSpec, rng);
}

// Sum of plaintexts reduced into the centered range; the clear-text oracle.
Poly clear_sum(const std::vector<Poly>& ms, std::int64_t p) {
  Poly acc(ms.front().size());
  for (const Poly& m : ms) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += m[i];
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = test::center_mod(acc[i], p);
  return acc;
}

TEST(AheTest, WorkedExampleSum) {
  const KeyPair keys = scripted_keys();
  const Ciphertext sum = ct_add(Ciphertext(kParams, kC1), Ciphertext(kParams, kC2));
  EXPECT_EQ(sum.poly(), (Poly{118, 70, 53, 114, 83, 98, 107}));
  EXPECT_EQ(sum.summands(), 2u);
  EXPECT_EQ(centered_lift(decrypt_stage_t(keys.priv, sum), 128),
            (Poly{-2, -2, 4, -12, 13, -10, 12}));
  const SumDecryption d = decrypt_sum(keys.priv, sum);
  EXPECT_EQ(d.sum.poly(), (Poly{1, 1, 1, 0, 0, 0, 0}));
  EXPECT_FALSE(d.capacity_exceeded);
}

TEST(AheTest, AdditionIsCommutative) {
  const Ciphertext a(kParams, kC1);
  const Ciphertext b(kParams, kC2);
  EXPECT_EQ(ct_add(a, b), ct_add(b, a));
}

TEST(AheTest, AggregateIsPermutationInvariant) {
  SeededRandom rng(5);
  const KeyPair keys = keygen(kParams, kSpec, rng);
  std::mt19937_64 gen(5);
  std::vector<Ciphertext> cts;
  for (int i = 0; i < 3; ++i) {
    cts.push_back(encrypt(keys.pub, Plaintext(test::random_centered(gen, 7, 3), 3), rng));
  }
  const Ciphertext base = aggregate(cts);
  std::sort(cts.begin(), cts.end(), [](const Ciphertext& x, const Ciphertext& y) {
    return test::as_vec(x.poly()) < test::as_vec(y.poly());
  });
  do {
    ASSERT_EQ(aggregate(cts), base);
  } while (std::next_permutation(
      cts.begin(), cts.end(), [](const Ciphertext& x, const Ciphertext& y) {
        return test::as_vec(x.poly()) < test::as_vec(y.poly());
      }));
}

TEST(AheTest, ThreeOnesWrapToZero) {
  const KeyPair keys = scripted_keys();
  SeededRandom rng(8);
  const Plaintext one(Poly::one(7), 3);
  std::vector<Ciphertext> cts;
  for (int i = 0; i < 3; ++i) cts.push_back(encrypt(keys.pub, one, rng));
  EXPECT_EQ(decrypt_sum(keys.priv, aggregate(cts)).sum.poly(), Poly(7));
}

TEST(AheTest, Errors) {
  EXPECT_THROW(aggregate(std::vector<Ciphertext>{}), EmptyAggregate);
  EXPECT_THROW(ct_add(Ciphertext(kParams, kC1),
                      Ciphertext(RingParams(7, 3, 256), kC2)),
               IncompatibleCiphertexts);
  EXPECT_THROW(ct_add(Ciphertext(kParams, kC1, 0xffffffffu),
                      Ciphertext(kParams, kC2)),
               OverflowError);
}

TEST(AheCapacityTest, Examples) {
  // B = p * 2 d_g + (2 d_f + 1) * floor(p / 2)
  EXPECT_EQ(noise_bound(kParams, kSpec), 17);
  EXPECT_EQ(capacity(kParams, kSpec), 3);
  EXPECT_EQ(capacity(RingParams(7, 3, 256), kSpec), 7);
  EXPECT_EQ(capacity(RingParams(167, 3, 2048), SamplingSpec{20, 20, 20}), 6);
  EXPECT_EQ(capacity(RingParams(167, 3, 128), SamplingSpec{7, 7, 7}), 1);
}

TEST(AheCapacityTest, IndependentFormula) {
  for (std::int64_t q : {64, 128, 256, 512, 2048}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      const RingParams params(7, 3, q);
      const SamplingSpec spec{d, d, d};
      const std::int64_t bound = 3 * 2 * static_cast<std::int64_t>(d) +
                                 (2 * static_cast<std::int64_t>(d) + 1) * 1;
      const std::int64_t half = (q - 1) / 2;
      if (bound >= half) {
        EXPECT_THROW(capacity(params, spec), ParameterTooTight);
      } else {
        EXPECT_EQ(capacity(params, spec), half / bound);
      }
    }
  }
}

TEST(AheCapacityTest, TooTight) {
  EXPECT_THROW(capacity(RingParams(7, 3, 32), kSpec), ParameterTooTight);
  // d = 1 gives B = 9; q = 19 gives floor(18 / 2) = 9. Equality is too tight.
  EXPECT_THROW(capacity(RingParams(7, 3, 19), SamplingSpec{1, 1, 1}),
               ParameterTooTight);
  EXPECT_EQ(capacity(RingParams(7, 3, 23), SamplingSpec{1, 1, 1}), 1);
}

TEST(AheCapacityTest, StressAtCapacityAlwaysDecrypts) {
  // 500 seeds at n_max for both capacities.
  for (std::int64_t q : {128, 256}) {
    const RingParams params(7, 3, q);
    const std::int64_t n_max = capacity(params, kSpec);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      SeededRandom rng(seed * 2 + q);
      std::mt19937_64 gen(seed);
      const KeyPair keys = keygen(params, kSpec, rng);
      std::vector<Poly> ms;
      std::vector<Ciphertext> cts;
      for (std::int64_t i = 0; i < n_max; ++i) {
        ms.push_back(test::random_centered(gen, 7, 3));
        cts.push_back(encrypt(keys.pub, Plaintext(ms.back(), 3), rng));
      }
      const SumDecryption d = decrypt_sum(keys.priv, aggregate(cts));
      ASSERT_FALSE(d.capacity_exceeded);
      ASSERT_EQ(d.sum.poly(), clear_sum(ms, 3)) << "q=" << q << " seed=" << seed;
    }
  }
}

TEST(AheCapacityTest, FlagsSumsPastCapacity) {
  const KeyPair keys = scripted_keys();
  SeededRandom rng(1);
  std::vector<Ciphertext> cts;
  for (int i = 0; i < 4; ++i) cts.push_back(encrypt(keys.pub, Plaintext::zero(7, 3), rng));
  EXPECT_TRUE(decrypt_sum(keys.priv, aggregate(cts)).capacity_exceeded);
  cts.pop_back();
  EXPECT_FALSE(decrypt_sum(keys.priv, aggregate(cts)).capacity_exceeded);
}

TEST(AheTest, OpposingMasksCancel) {
  // Each party blinds its input with a mask; masks sum to zero mod p.
  SeededRandom rng(12);
  const RingParams params(7, 3, 256);
  const KeyPair keys = keygen(params, kSpec, rng);
  std::mt19937_64 gen(12);
  const Poly x1 = test::random_centered(gen, 7, 3);
  const Poly x2 = test::random_centered(gen, 7, 3);
  const Poly mask = test::random_centered(gen, 7, 3);
  Poly y1(7), y2(7);
  for (std::size_t i = 0; i < 7; ++i) {
    y1[i] = test::center_mod(x1[i] + mask[i], 3);
    y2[i] = test::center_mod(x2[i] - mask[i], 3);
  }
  const std::vector<Ciphertext> cts{encrypt(keys.pub, Plaintext(y1, 3), rng),
                                    encrypt(keys.pub, Plaintext(y2, 3), rng)};
  EXPECT_EQ(decrypt_sum(keys.priv, aggregate(cts)).sum.poly(), clear_sum({x1, x2}, 3));
}

}  // namespace
}  // namespace ntruhe
