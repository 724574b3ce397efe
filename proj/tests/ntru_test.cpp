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

#include "ntruhe/ntru.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ntruhe/errors.hpp"
#include "ntruhe/testing.hpp"
#include "test_util.hpp"

namespace ntruhe {
namespace {

using test::naive_convolve;

// Worked example, N = 7, p = 3, q = 128, d = 2.
const Poly kF{1, -1, 1, 0, 0, -1, 1};
const Poly kG{-1, 1, -1, 1, 0, 0, 0};
const Poly kFp{0, 2, 0, 0, 1, 0, 1};
const Poly kFq{87, 58, 81, 54, 36, 67, 2};
const Poly kH{12, 94, 20, 56, 123, 124, 83};
const Poly kM1{1, 1, 0, 0, 0, 0, 0};
const Poly kR1{-1, 0, 0, 1, -1, 1, 0};
const Poly kC1{98, 18, 58, 119, 126, 82, 13};
const Poly kT1{127, 0, 3, 123, 6, 118, 9};
const Poly kM2{0, 0, 1, 0, 0, 0, 0};
const Poly kR2{0, 1, 0, 1, 0, -1, -1};
const Poly kC2{20, 52, 123, 123, 85, 16, 94};

KeyPair scripted_keys() {
  ScriptedRandom rng;
  rng.push_poly(kF).push_poly(kG);
  return keygen(RingParams(7, 3, 128), SamplingSpec{2, 2, 2}, rng);
}

TEST(NtruKeygenTest, WorkedExample) {
  const KeyPair keys = scripted_keys();
  EXPECT_EQ(keys.priv.f(), kF);
  EXPECT_EQ(keys.priv.f_p(), kFp);
  EXPECT_EQ(keys.priv.f_q(), kFq);
  EXPECT_EQ(keys.pub.h(), kH);
}

TEST(NtruEncryptTest, WorkedExample) {
  const KeyPair keys = scripted_keys();
  EXPECT_EQ(encrypt_with_blinding(keys.pub, Plaintext(kM1, 3), kR1).poly(), kC1);
  EXPECT_EQ(encrypt_with_blinding(keys.pub, Plaintext(kM2, 3), kR2).poly(), kC2);
  ScriptedRandom rng;
  rng.push_poly(kR1);
  EXPECT_EQ(encrypt(keys.pub, Plaintext(kM1, 3), rng).poly(), kC1);
}

TEST(NtruDecryptTest, WorkedExample) {
  const KeyPair keys = scripted_keys();
  const RingParams params(7, 3, 128);
  const Ciphertext c1(params, kC1);
  EXPECT_EQ(decrypt_stage_t(keys.priv, c1), kT1);
  EXPECT_EQ(decrypt(keys.priv, c1).poly(), kM1);
  EXPECT_EQ(decrypt(keys.priv, Ciphertext(params, kC2)).poly(), kM2);
}

TEST(NtruKeygenTest, ManySeedsSatisfyInvariants) {
  const RingParams params(7, 3, 128);
  const SamplingSpec spec{2, 2, 2};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SeededRandom rng(seed);
    const testing::TracedKeyPair t = testing::keygen_traced(params, spec, rng);
    const PrivateKey& priv = t.keys.priv;
    ASSERT_EQ(test::count_value(priv.f(), 1), 3);
    ASSERT_EQ(test::count_value(priv.f(), -1), 2);
    ASSERT_EQ(test::count_value(t.g, 1), 2);
    ASSERT_EQ(test::count_value(t.g, -1), 2);
    ASSERT_TRUE(test::naive_is_one(naive_convolve(priv.f(), priv.f_p(), 3)));
    ASSERT_TRUE(test::naive_is_one(naive_convolve(priv.f(), priv.f_q(), 128)));
    ASSERT_EQ(t.keys.pub.h(), naive_convolve(priv.f_q(), t.g, 128));
  }
}

TEST(NtruKeygenTest, ExhaustsOnNonInvertibleF) {
  // N = 8: f(-1) = 3 = 0 mod 3, so (x + 1) divides f mod 3.
  const Poly bad{1, -1, 1, 0, 1, 0, -1, 0};
  ASSERT_FALSE(test::brute_force_inverse(reduce_mod(bad, 3), 3).has_value());
  const RingParams params(8, 3, 128);
  const SamplingSpec spec{2, 2, 2};
  ScriptedRandom rng;
  for (int i = 0; i < kKeygenAttempts; ++i) rng.push_poly(bad);
  EXPECT_THROW(keygen(params, spec, rng), KeygenExhausted);
}

TEST(NtruKeygenTest, RetriesUntilInvertible) {
  const Poly bad{1, -1, 1, 0, 1, 0, -1, 0};
  const Poly good{1, 1, 1, -1, -1, 0, 0, 0};
  const Poly g{1, 1, -1, -1, 0, 0, 0, 0};
  const RingParams params(8, 3, 128);
  ScriptedRandom rng;
  for (int i = 0; i < kKeygenAttempts - 1; ++i) rng.push_poly(bad);
  rng.push_poly(good).push_poly(g);
  const KeyPair keys = keygen(params, SamplingSpec{2, 2, 2}, rng);
  EXPECT_EQ(keys.priv.f(), good);
  EXPECT_EQ(rng.pending_polys(), 0u);
}

TEST(NtruKeygenTest, RejectsInfeasibleSpec) {
  SeededRandom rng(1);
  EXPECT_THROW(keygen(RingParams(7, 3, 128), SamplingSpec{4, 2, 2}, rng),
               InvalidParameters);
  EXPECT_THROW(keygen(RingParams(7, 3, 128), SamplingSpec{2, 4, 2}, rng),
               InvalidParameters);
}

TEST(NtruKeygenTest, FullWeightFNeverInvertsModTwo) {
  // d_f = 3 at N = 7 makes every coefficient +-1, so f = 1 + x + ... + x^6
  // mod 2, which divides x^7 - 1. Every attempt fails.
  SeededRandom rng(1);
  EXPECT_THROW(keygen(RingParams(7, 3, 128), SamplingSpec{3, 2, 2}, rng),
               KeygenExhausted);
  EXPECT_FALSE(test::brute_force_inverse(Poly{1, 1, 1, 1, 1, 1, 1}, 2));
}

struct RoundTripCase {
  std::size_t n;
  std::int64_t p;
  std::int64_t q;
  SamplingSpec spec;
  int trials;
};

class NtruRoundTripTest : public ::testing::TestWithParam<RoundTripCase> {};

TEST_P(NtruRoundTripTest, DecryptInvertsEncryptAndNoiseIsExact) {
  const RoundTripCase c = GetParam();
  const RingParams params(c.n, c.p, c.q);
  SeededRandom rng(c.n * 31 + c.q);
  std::mt19937_64 gen(c.n);
  for (int k = 0; k < 5; ++k) {
    const testing::TracedKeyPair t = testing::keygen_traced(params, c.spec, rng);
    for (int trial = 0; trial < c.trials; ++trial) {
      const Poly m = test::random_centered(gen, c.n, c.p);
      const Poly r = rng.ternary(c.n, c.spec.d_r, c.spec.d_r);
      const Ciphertext ct =
          encrypt_with_blinding(t.keys.pub, Plaintext(m, c.p), r);
      ASSERT_EQ(decrypt(t.keys.priv, ct).poly(), m);
      // centered t equals p g r + f m over the integers
      const auto gr = test::integer_convolve(t.g, r);
      const auto fm = test::integer_convolve(t.keys.priv.f(), m);
      const Poly tt = centered_lift(decrypt_stage_t(t.keys.priv, ct), c.q);
      for (std::size_t i = 0; i < c.n; ++i) {
        ASSERT_EQ(static_cast<__int128>(tt[i]), c.p * gr[i] + fm[i]);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Rings, NtruRoundTripTest,
    ::testing::Values(RoundTripCase{7, 3, 128, {2, 2, 2}, 200},
                      RoundTripCase{11, 3, 256, {3, 3, 3}, 100},
                      RoundTripCase{167, 3, 128, {7, 7, 7}, 20},
                      RoundTripCase{167, 3, 2048, {20, 20, 20}, 20},
                      RoundTripCase{107, 5, 4096, {10, 10, 10}, 20},
                      RoundTripCase{251, 3, 4096, {30, 30, 30}, 5}));

TEST(NtruEncryptTest, FreshRandomnessGivesDistinctCiphertexts) {
  SeededRandom rng(9);
  const KeyPair keys = keygen(RingParams(7, 3, 128), SamplingSpec{2, 2, 2}, rng);
  const Plaintext m(kM1, 3);
  std::set<std::vector<std::int64_t>> seen;
  for (int i = 0; i < 50; ++i) {
    const Ciphertext ct = encrypt(keys.pub, m, rng);
    seen.insert(test::as_vec(ct.poly()));
    ASSERT_EQ(decrypt(keys.priv, ct).poly(), kM1);
  }
  EXPECT_GT(seen.size(), 30u);
}

TEST(NtruEncryptTest, RejectsBadPlaintext) {
  EXPECT_THROW(Plaintext(Poly{2, 0, 0, 0, 0, 0, 0}, 3), InvalidPlaintext);
  EXPECT_THROW(Plaintext(Poly{-2, 0, 0}, 3), InvalidPlaintext);
  EXPECT_NO_THROW(Plaintext(Poly{-1, 0, 1}, 3));
  EXPECT_THROW(Plaintext(Poly{-2, 0}, 4), InvalidPlaintext);
  EXPECT_NO_THROW(Plaintext(Poly{2, -1}, 4));
  const KeyPair keys = scripted_keys();
  SeededRandom rng(0);
  EXPECT_THROW(encrypt(keys.pub, Plaintext(Poly{1, 0, 0}, 3), rng),
               InvalidPlaintext);
}

TEST(NtruCiphertextTest, Validation) {
  const RingParams params(7, 3, 128);
  EXPECT_THROW(Ciphertext(params, Poly{128, 0, 0, 0, 0, 0, 0}), InvalidCiphertext);
  EXPECT_THROW(Ciphertext(params, Poly{-1, 0, 0, 0, 0, 0, 0}), InvalidCiphertext);
  EXPECT_THROW(Ciphertext(params, Poly(6)), InvalidCiphertext);
  EXPECT_THROW(Ciphertext(params, Poly(7), 0), InvalidCiphertext);
}

TEST(NtruDecryptTest, RejectsMismatchedParameters) {
  const KeyPair keys = scripted_keys();
  EXPECT_THROW(decrypt(keys.priv, Ciphertext(RingParams(7, 3, 256), kC1)),
               IncompatibleCiphertexts);
}

TEST(NtruPrivateKeyTest, RejectsInconsistentInverses) {
  const RingParams params(7, 3, 128);
  Poly wrong = kFq;
  wrong[0] = (wrong[0] + 1) % 128;
  EXPECT_THROW(PrivateKey(params, {2, 2, 2}, kF, kFp, wrong), InvalidParameters);
  EXPECT_THROW(PrivateKey(params, {2, 2, 2}, kF, Poly{1, 2, 0, 0, 1, 0, 1}, kFq),
               InvalidParameters);
}

TEST(NtruTestHookTest, RegeneratePublicKeepsDecryption) {
  const KeyPair keys = scripted_keys();
  SeededRandom rng(4);
  Poly g;
  const PublicKey other = testing::regenerate_public(keys.priv, rng, &g);
  EXPECT_EQ(other.h(), naive_convolve(keys.priv.f_q(), g, 128));
  const Ciphertext ct = encrypt(other, Plaintext(kM2, 3), rng);
  EXPECT_EQ(decrypt(keys.priv, ct).poly(), kM2);
}

}  // namespace
}  // namespace ntruhe
