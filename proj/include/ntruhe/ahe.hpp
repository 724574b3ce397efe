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

// Additive homomorphism over NTRU ciphertexts.
//
// Summing n ciphertexts c_s = p h r_s + m_s gives C with
//   C * f = p g (r_1 + ... + r_n) + (m_1 + ... + m_n) f   (mod q),
// so decryption returns the coefficient-wise sum of the m_s, reduced into the
// centered range mod p. Sums wrap mod p: pick p larger than any possible
// coefficient sum if wraparound is unwanted.
//
// Exactness needs the right-hand side to stay inside (-q/2, q/2]. capacity()
// gives a worst-case n for which that always holds.

#include <cstdint>
#include <span>

#include "ntruhe/ntru.hpp"

namespace ntruhe {

// Same representation as a fresh ciphertext; summands() counts the fresh
// encryptions absorbed.
using AggregateCiphertext = Ciphertext;

// Coefficient-wise sum mod q. Throws IncompatibleCiphertexts on differing
// (N, p, q), OverflowError if the summand count would exceed 2^32 - 1.
AggregateCiphertext ct_add(const Ciphertext& a, const Ciphertext& b);

// Left fold of ct_add. Throws EmptyAggregate on an empty input.
AggregateCiphertext aggregate(std::span<const Ciphertext> cts);

// Per-coefficient noise bound of one fresh ciphertext, from the sampling
// spec only:  B = p * 2 d_g * 1 + (2 d_f + 1) * floor(p / 2).
std::int64_t noise_bound(const RingParams& params, const SamplingSpec& spec);

// Largest n with n * B <= floor((q - 1) / 2). Throws ParameterTooTight when
// B >= floor((q - 1) / 2).
std::int64_t capacity(const RingParams& params, const SamplingSpec& spec);

struct SumDecryption {
  Plaintext sum;
  // Set when summands > capacity; `sum` may then be wrong.
  bool capacity_exceeded = false;
};

// Decrypts an aggregate to the centered mod-p sum of its plaintexts. Never
// refuses: past capacity the result is flagged instead.
SumDecryption decrypt_sum(const PrivateKey& priv, const AggregateCiphertext& agg);

}  // namespace ntruhe
