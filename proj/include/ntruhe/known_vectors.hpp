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

#pragma once

// The published N = 7, p = 3, q = 128 worked example and the toy RSA
// example (kappa = 391), as fixtures plus a self-check that recomputes every
// intermediate value.

#include <cstdint>
#include <ostream>

#include "ntruhe/ntru.hpp"

namespace ntruhe::known {

struct NtruVectors {
  std::size_t n = 7;
  std::int64_t p = 3;
  std::int64_t q = 128;
  SamplingSpec spec{2, 2, 2};

  Poly f{1, -1, 1, 0, 0, -1, 1};
  Poly f_p{0, 2, 0, 0, 1, 0, 1};
  Poly f_q{87, 58, 81, 54, 36, 67, 2};
  // x^3 - x^2 + x - 1. The published product line shows 2x for the linear
  // term, but only this g reproduces h.
  Poly g{-1, 1, -1, 1, 0, 0, 0};
  Poly h{12, 94, 20, 56, 123, 124, 83};

  // First message: m1 = x + 1, r1 = x^5 - x^4 + x^3 - 1 (published with
  // 127 for -1).
  Poly m1{1, 1, 0, 0, 0, 0, 0};
  Poly r1{-1, 0, 0, 1, -1, 1, 0};
  Poly c1{98, 18, 58, 119, 126, 82, 13};
  Poly t1{127, 0, 3, 123, 6, 118, 9};
  Poly t1_centered{-1, 0, 3, -5, 6, -10, 9};
  Poly tau1{2, 0, 0, 1, 0, 2, 0};

  // Second message: m2 = x^2, r2 = -x^6 - x^5 + x^3 + x.
  Poly m2{0, 0, 1, 0, 0, 0, 0};
  Poly r2{0, 1, 0, 1, 0, -1, -1};
  Poly c2{20, 52, 123, 123, 85, 16, 94};

  Poly sum_ct{118, 70, 53, 114, 83, 98, 107};
  Poly sum_t_centered{-2, -2, 4, -12, 13, -10, 12};
  Poly sum_tau{1, 1, 1, 0, 1, 2, 0};
  Poly sum_m{1, 1, 1, 0, 0, 0, 0};

  RingParams params() const { return RingParams(n, p, q); }
};

struct RsaVectors {
  std::uint64_t prime1 = 17;
  std::uint64_t prime2 = 23;
  std::uint64_t kappa = 391;
  std::uint64_t xi = 3;
  std::uint64_t zeta = 59;
  std::uint64_t a1 = 11;
  std::uint64_t a2 = 13;
  std::uint64_t c1 = 158;
  std::uint64_t c2 = 242;
  std::uint64_t product = 309;
  std::uint64_t decrypted = 143;
};

// Keys and ciphertexts built directly from the fixture values.
KeyPair fixture_keys(const NtruVectors& v);
Ciphertext fixture_c1(const NtruVectors& v);
Ciphertext fixture_c2(const NtruVectors& v);

// Recomputes every fixture value through the library and prints one
// "PASS <label>" or "FAIL <label> expected=... actual=..." line per check.
// Returns true iff all pass.
bool check_ntru(const NtruVectors& v, std::ostream& out);
bool check_rsa(const RsaVectors& v, std::ostream& out);
bool check_all(const NtruVectors& ntru, const RsaVectors& rsa,
               std::ostream& out);

}  // namespace ntruhe::known
