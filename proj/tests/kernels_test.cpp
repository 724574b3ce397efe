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

#include "ntruhe/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "test_util.hpp"

namespace ntruhe::kernels {
namespace {

using Vec = std::vector<std::int64_t>;

Vec random_vec(std::mt19937_64& gen, std::size_t n, std::int64_t lo,
               std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  Vec v(n);
  for (auto& x : v) x = dist(gen);
  return v;
}

// Unreduced cyclic convolution; the table contract.
Vec reference_convolve(const Vec& a, const Vec& b) {
  const std::size_t n = a.size();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
  }
  return out;
}

TEST(IsaTest, NamesRoundTrip) {
  EXPECT_EQ(parse_isa(isa_name(Isa::kScalar)), Isa::kScalar);
  EXPECT_EQ(parse_isa(isa_name(Isa::kAvx2)), Isa::kAvx2);
  EXPECT_FALSE(parse_isa("neon"));
}

TEST(DispatchTest, ScalarAlwaysSelectable) {
  const Isa before = active().isa;
  EXPECT_TRUE(available(Isa::kScalar));
  EXPECT_TRUE(select(Isa::kScalar));
  EXPECT_EQ(active().isa, Isa::kScalar);
  select(before);
}

TEST(DispatchTest, Avx2SelectableIffAvailable) {
  const Isa before = active().isa;
  EXPECT_EQ(select(Isa::kAvx2), available(Isa::kAvx2));
  EXPECT_EQ(avx2_kernels() != nullptr, available(Isa::kAvx2));
  select(before);
}

TEST(ScalarKernelTest, MatchesReference) {
  std::mt19937_64 gen(1);
  const KernelTable& k = scalar_kernels();
  for (std::size_t n = 1; n <= 40; ++n) {
    const Vec a = random_vec(gen, n, -1000, 1000);
    const Vec b = random_vec(gen, n, -1000, 1000);
    Vec out(n);
    k.cyclic_convolve(a, b, out);
    ASSERT_EQ(out, reference_convolve(a, b)) << "n=" << n;
  }
}

TEST(ScalarKernelTest, CenterBoundaries) {
  const KernelTable& k = scalar_kernels();
  Vec out(4);
  k.center(Vec{0, 64, 65, 127}, out, 128);
  EXPECT_EQ(out, (Vec{0, 64, -63, -1}));
  Vec out3(3);
  k.center(Vec{0, 1, 2}, out3, 3);
  EXPECT_EQ(out3, (Vec{0, 1, -1}));
}

class Avx2EquivalenceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    simd_ = avx2_kernels();
    if (simd_ == nullptr) GTEST_SKIP() << "AVX2 not available on this host";
  }
  const KernelTable* simd_ = nullptr;
};

TEST_F(Avx2EquivalenceTest, ConvolveAllLengthsIncludingTails) {
  std::mt19937_64 gen(2);
  const KernelTable& ref = scalar_kernels();
  for (std::size_t n = 1; n <= 70; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Vec a = random_vec(gen, n, 0, (1 << 20) - 1);
      const Vec b = random_vec(gen, n, -(1 << 20), 1 << 20);
      Vec x(n), y(n);
      ref.cyclic_convolve(a, b, x);
      simd_->cyclic_convolve(a, b, y);
      ASSERT_EQ(x, y) << "n=" << n;
    }
  }
}

TEST_F(Avx2EquivalenceTest, ConvolveProductionSizesAndExtremes) {
  // Operands as large as the ring admits: n * lim^2 must fit in int64.
  std::mt19937_64 gen(3);
  const KernelTable& ref = scalar_kernels();
  for (std::size_t n : {167u, 251u, 503u, 1024u}) {
    const auto lim = static_cast<std::int64_t>(
        std::sqrt(static_cast<double>(INT64_MAX) / static_cast<double>(n)));
    const Vec a = random_vec(gen, n, 0, lim - 1);
    const Vec b = random_vec(gen, n, 0, lim - 1);
    Vec x(n), y(n);
    ref.cyclic_convolve(a, b, x);
    simd_->cyclic_convolve(a, b, y);
    ASSERT_EQ(x, y) << "n=" << n;
  }
  // q - 1 = 2^31 - 2 is only admissible at N = 2.
  const Vec big(2, (std::int64_t{1} << 31) - 2);
  const Vec neg(2, -((std::int64_t{1} << 31) - 2));
  Vec x(2), y(2);
  ref.cyclic_convolve(big, neg, x);
  simd_->cyclic_convolve(big, neg, y);
  EXPECT_EQ(x, y);
}

TEST_F(Avx2EquivalenceTest, AddModAndCenter) {
  std::mt19937_64 gen(4);
  const KernelTable& ref = scalar_kernels();
  for (std::int64_t m : {2, 3, 127, 128, 2048, 2147483647}) {
    for (std::size_t n = 1; n <= 37; ++n) {
      const Vec a = random_vec(gen, n, 0, m - 1);
      const Vec b = random_vec(gen, n, 0, m - 1);
      Vec x(n), y(n);
      ref.add_mod(a, b, x, m);
      simd_->add_mod(a, b, y, m);
      ASSERT_EQ(x, y) << "add m=" << m << " n=" << n;
      ref.center(a, x, m);
      simd_->center(a, y, m);
      ASSERT_EQ(x, y) << "center m=" << m << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace ntruhe::kernels
