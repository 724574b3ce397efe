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

// Textbook RSA as a multiplicative homomorphism: e(a) e(b) = e(a b) mod kappa.
//
// Toy-sized (kappa < 2^64) and unpadded. INSECURE; for contrast with the
// lattice scheme only.

#include <cstdint>
#include <span>

#include "ntruhe/random.hpp"

namespace ntruhe::rsa {

struct RsaKeys {
  std::uint64_t kappa;  // modulus
  std::uint64_t xi;     // public exponent
  std::uint64_t zeta;   // private exponent, xi^-1 mod lambda(kappa)

  friend bool operator==(const RsaKeys&, const RsaKeys&) = default;
};

// Keys from two distinct primes: xi is the smallest e >= 3 coprime to
// lambda = lcm(p1 - 1, p2 - 1). Throws InvalidParameters if an input is not
// prime, the primes coincide, or kappa overflows 64 bits.
RsaKeys keys_from_primes(std::uint64_t p1, std::uint64_t p2);

// Two random primes of bit_length / 2 bits each, found by trial division.
// bit_length in [16, 64].
RsaKeys keygen(int bit_length, RandomSource& rng);

// Carmichael lambda of kappa = p1 * p2.
std::uint64_t carmichael(std::uint64_t p1, std::uint64_t p2);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// a^xi mod kappa. Throws InvalidPlaintext unless a < kappa.
std::uint64_t encrypt(const RsaKeys& keys, std::uint64_t a);

// c^zeta mod kappa. Throws InvalidCiphertext unless c < kappa.
std::uint64_t decrypt(const RsaKeys& keys, std::uint64_t c);

// Product of ciphertexts mod kappa. Throws EmptyAggregate on empty input and
// InvalidCiphertext on an out-of-range element.
std::uint64_t ct_mul(const RsaKeys& keys, std::span<const std::uint64_t> cs);

}  // namespace ntruhe::rsa
