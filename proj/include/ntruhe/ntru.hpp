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

// Classic NTRU over Z[x]/(x^N - 1):
//
//   keygen:  f ternary, F_p = f^-1 mod p, F_q = f^-1 mod q, h = F_q * g mod q
//   encrypt: c = p * h * r + m mod q
//   decrypt: t = c * f mod q, lifted to (-q/2, q/2]; m = (t mod p) * F_p mod p
//
// Decryption is exact while every coefficient of p * g * r + m * f stays in
// (-q/2, q/2]. See ahe.hpp for the bound on summed ciphertexts.

#include <cstddef>
#include <cstdint>
#include <utility>

#include "ntruhe/polyring.hpp"
#include "ntruhe/random.hpp"

namespace ntruhe {

// Ternary sampling shape. f has d_f + 1 coefficients equal to +1 and d_f
// equal to -1 (so f(1) = 1); g and every r have d_g / d_r of each sign.
struct SamplingSpec {
  std::size_t d_f = 0;
  std::size_t d_g = 0;
  std::size_t d_r = 0;

  // Throws InvalidParameters unless 2 d_f + 1 <= N, 2 d_g <= N, 2 d_r <= N.
  void validate(std::size_t n) const;

  friend bool operator==(const SamplingSpec&, const SamplingSpec&) = default;
};

// Number of resampling attempts keygen makes for an invertible f.
inline constexpr int kKeygenAttempts = 100;

// Message polynomial with centered coefficients mod p.
class Plaintext {
 public:
  // Throws InvalidPlaintext if a coefficient is outside the centered range.
  Plaintext(Poly m, std::int64_t p);

  static Plaintext zero(std::size_t n, std::int64_t p);

  const Poly& poly() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.size(); }

  friend bool operator==(const Plaintext&, const Plaintext&) = default;

 private:
  Poly m_;
};

// Polynomial in R_q plus the number of fresh encryptions summed into it.
class Ciphertext {
 public:
  // Throws InvalidCiphertext unless c has N coefficients in [0, q) and
  // summands >= 1.
  Ciphertext(RingParams params, Poly c, std::uint32_t summands = 1);

  const RingParams& params() const noexcept { return params_; }
  const Poly& poly() const noexcept { return c_; }
  std::uint32_t summands() const noexcept { return summands_; }

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;

 private:
  RingParams params_;
  Poly c_;
  std::uint32_t summands_;
};

class PublicKey {
 public:
  // Throws InvalidParameters if h is not a length-N polynomial in [0, q).
  PublicKey(RingParams params, SamplingSpec spec, Poly h);

  const RingParams& params() const noexcept { return params_; }
  const SamplingSpec& spec() const noexcept { return spec_; }
  const Poly& h() const noexcept { return h_; }

  friend bool operator==(const PublicKey&, const PublicKey&) = default;

 private:
  RingParams params_;
  SamplingSpec spec_;
  Poly h_;
};

class PrivateKey {
 public:
  // Checks f * F_p = 1 mod p and f * F_q = 1 mod q; throws InvalidParameters
  // otherwise.
  PrivateKey(RingParams params, SamplingSpec spec, Poly f, Poly f_p, Poly f_q);

  const RingParams& params() const noexcept { return params_; }
  const SamplingSpec& spec() const noexcept { return spec_; }
  const Poly& f() const noexcept { return f_; }
  const Poly& f_p() const noexcept { return f_p_; }
  const Poly& f_q() const noexcept { return f_q_; }

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;

 private:
  RingParams params_;
  SamplingSpec spec_;
  Poly f_;
  Poly f_p_;
  Poly f_q_;
};

struct KeyPair {
  PrivateKey priv;
  PublicKey pub;
};

// Samples f until it is invertible mod p and mod q (at most kKeygenAttempts
// tries, then KeygenExhausted), then samples g, publishes h = F_q * g and
// drops g.
KeyPair keygen(const RingParams& params, const SamplingSpec& spec,
               RandomSource& rng);

// c = p * h * r + m mod q with a fresh ternary r. Throws InvalidPlaintext on
// a length mismatch or out-of-range coefficient.
Ciphertext encrypt(const PublicKey& pub, const Plaintext& m, RandomSource& rng);

// Shared by encrypt and the tests that replay known r values.
Ciphertext encrypt_with_blinding(const PublicKey& pub, const Plaintext& m,
                                 const Poly& r);

// Recovers m. A ciphertext whose noise has left (-q/2, q/2] decrypts to an
// unrelated plaintext without any error; nothing here can detect that.
// Throws IncompatibleCiphertexts if the ciphertext was made under other
// ring parameters.
Plaintext decrypt(const PrivateKey& priv, const Ciphertext& ct);

// First decryption stage: t = c * f mod q in [0, q).
Poly decrypt_stage_t(const PrivateKey& priv, const Ciphertext& ct);

}  // namespace ntruhe
