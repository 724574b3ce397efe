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

#include <numeric>
#include <string>

#include "ntruhe/errors.hpp"

namespace ntruhe::rsa {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Inverse of a mod m via extended Euclid; a and m coprime.
std::uint64_t inverse(std::uint64_t a, std::uint64_t m) {
  __int128 old_r = a, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    __int128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

std::uint64_t random_prime(int bits, RandomSource& rng) {
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  const std::uint64_t span = lo;  // [2^(bits-1), 2^bits)
  for (;;) {
    std::uint64_t candidate = lo + rng.uniform(span);
    candidate |= 1;
    if (is_prime_u64(candidate)) return candidate;
  }
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t carmichael(std::uint64_t p1, std::uint64_t p2) {
  return std::lcm(p1 - 1, p2 - 1);
}

RsaKeys keys_from_primes(std::uint64_t p1, std::uint64_t p2) {
  if (!is_prime_u64(p1) || !is_prime_u64(p2)) {
    throw InvalidParameters("RSA factors must be prime");
  }
  if (p1 == p2) throw InvalidParameters("RSA factors must be distinct");
  std::uint64_t kappa = 0;
  if (__builtin_mul_overflow(p1, p2, &kappa)) {
    throw InvalidParameters("RSA modulus exceeds 64 bits");
  }
  const std::uint64_t lambda = carmichael(p1, p2);
  std::uint64_t xi = 3;
  while (std::gcd(xi, lambda) != 1) ++xi;
  return RsaKeys{kappa, xi, inverse(xi, lambda)};
}

RsaKeys keygen(int bit_length, RandomSource& rng) {
  if (bit_length < 16 || bit_length > 64) {
    throw InvalidParameters("RSA bit length must be in [16, 64], got " +
                            std::to_string(bit_length));
  }
  const int half = bit_length / 2;
  const std::uint64_t p1 = random_prime(half, rng);
  std::uint64_t p2 = p1;
  while (p2 == p1) p2 = random_prime(bit_length - half, rng);
  return keys_from_primes(p1, p2);
}

std::uint64_t encrypt(const RsaKeys& keys, std::uint64_t a) {
  if (a >= keys.kappa) {
    throw InvalidPlaintext("RSA plaintext must be below kappa");
  }
  return mod_pow(a, keys.xi, keys.kappa);
}

std::uint64_t decrypt(const RsaKeys& keys, std::uint64_t c) {
  if (c >= keys.kappa) {
    throw InvalidCiphertext("RSA ciphertext must be below kappa");
  }
  return mod_pow(c, keys.zeta, keys.kappa);
}

std::uint64_t ct_mul(const RsaKeys& keys, std::span<const std::uint64_t> cs) {
  if (cs.empty()) throw EmptyAggregate("product of zero RSA ciphertexts");
  std::uint64_t acc = 1;
  for (std::uint64_t c : cs) {
    if (c >= keys.kappa) {
      throw InvalidCiphertext("RSA ciphertext must be below kappa");
    }
    acc = mul_mod(acc, c, keys.kappa);
  }
  return acc;
}

}  // namespace ntruhe::rsa
