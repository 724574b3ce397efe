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

#include "ntruhe/known_vectors.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace ntruhe::known {
namespace {

TEST(KnownVectorsTest, ShippedFixturesPass) {
  std::ostringstream out;
  EXPECT_TRUE(check_all(NtruVectors{}, RsaVectors{}, out));
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
}

TEST(KnownVectorsTest, CorruptedCiphertextFails) {
  NtruVectors v;
  v.c1[3] = (v.c1[3] + 1) % 128;
  std::ostringstream out;
  EXPECT_FALSE(check_all(v, RsaVectors{}, out));
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST(KnownVectorsTest, CorruptedKeyFails) {
  NtruVectors v;
  v.f_q[0] = 86;
  std::ostringstream out;
  EXPECT_FALSE(check_ntru(v, out));
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST(KnownVectorsTest, CorruptedRsaFails) {
  RsaVectors v;
  v.product = 310;
  std::ostringstream out;
  EXPECT_FALSE(check_rsa(v, out));
}

}  // namespace
}  // namespace ntruhe::known
