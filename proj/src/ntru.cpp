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

#include <algorithm>
#include <optional>
#include <string>

#include "ntruhe/errors.hpp"
#include "ntruhe/testing.hpp"

namespace ntruhe {
namespace {

bool in_range(const Poly& a, std::int64_t m) {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(),
                     [m](Coeff c) { return c >= 0 && c < m; });
}

struct SecretPart {
  Poly f;
  Poly f_p;
  Poly f_q;
};

SecretPart sample_invertible_f(const RingParams& params,
                               const SamplingSpec& spec, RandomSource& rng) {
  for (int attempt = 0; attempt < kKeygenAttempts; ++attempt) {
    Poly f = rng.ternary(params.n(), spec.d_f + 1, spec.d_f);
    try {
      Poly f_p = inverse_mod(f, params.p_factor());
      Poly f_q = inverse_mod(f, params.q_factor());
      return {std::move(f), std::move(f_p), std::move(f_q)};
    } catch (const NotInvertible&) {
    }
  }
  throw KeygenExhausted("no invertible f after " +
                        std::to_string(kKeygenAttempts) + " attempts");
}

Poly sample_g(const RingParams& params, const SamplingSpec& spec,
              RandomSource& rng) {
  return rng.ternary(params.n(), spec.d_g, spec.d_g);
}

void check_compatible(const RingParams& key, const RingParams& ct) {
  if (!(key == ct)) {
    throw IncompatibleCiphertexts("ciphertext (N, p, q) does not match key");
  }
}

}  // namespace

void SamplingSpec::validate(std::size_t n) const {
  if (2 * d_f + 1 > n) throw InvalidParameters("need 2 d_f + 1 <= N");
  if (2 * d_g > n) throw InvalidParameters("need 2 d_g <= N");
  if (2 * d_r > n) throw InvalidParameters("need 2 d_r <= N");
}

Plaintext::Plaintext(Poly m, std::int64_t p) : m_(std::move(m)) {
  if (!is_centered(m_, p)) {
    throw InvalidPlaintext("plaintext coefficient outside centered range mod " +
                           std::to_string(p));
  }
}

Plaintext Plaintext::zero(std::size_t n, std::int64_t p) {
  return Plaintext(Poly(n), p);
}

Ciphertext::Ciphertext(RingParams params, Poly c, std::uint32_t summands)
    : params_(params), c_(std::move(c)), summands_(summands) {
  if (c_.size() != params_.n()) {
    throw InvalidCiphertext("ciphertext length does not match N");
  }
  if (!in_range(c_, params_.q())) {
    throw InvalidCiphertext("ciphertext coefficient outside [0, q)");
  }
  if (summands_ < 1) throw InvalidCiphertext("summand count must be >= 1");
}

PublicKey::PublicKey(RingParams params, SamplingSpec spec, Poly h)
    : params_(params), spec_(spec), h_(std::move(h)) {
  spec_.validate(params_.n());
  if (h_.size() != params_.n() || !in_range(h_, params_.q())) {
    throw InvalidParameters("public key h must have N coefficients in [0, q)");
  }
}

PrivateKey::PrivateKey(RingParams params, SamplingSpec spec, Poly f, Poly f_p,
                       Poly f_q)
    : params_(params),
      spec_(spec),
      f_(std::move(f)),
      f_p_(std::move(f_p)),
      f_q_(std::move(f_q)) {
  spec_.validate(params_.n());
  const std::size_t n = params_.n();
  if (f_.size() != n || f_p_.size() != n || f_q_.size() != n) {
    throw InvalidParameters("private key polynomials must have N coefficients");
  }
  if (!in_range(f_p_, params_.p()) || !in_range(f_q_, params_.q())) {
    throw InvalidParameters("F_p / F_q must be reduced mod p / q");
  }
  const Poly one = Poly::one(n);
  if (poly_convolve(f_, f_p_, params_.p()) != one) {
    throw InvalidParameters("f * F_p != 1 mod p");
  }
  if (poly_convolve(f_, f_q_, params_.q()) != one) {
    throw InvalidParameters("f * F_q != 1 mod q");
  }
}

KeyPair keygen(const RingParams& params, const SamplingSpec& spec,
               RandomSource& rng) {
  return testing::keygen_traced(params, spec, rng).keys;
}

Ciphertext encrypt_with_blinding(const PublicKey& pub, const Plaintext& m,
                                 const Poly& r) {
  const RingParams& params = pub.params();
  if (m.size() != params.n()) {
    throw InvalidPlaintext("plaintext length does not match N");
  }
  if (!is_centered(m.poly(), params.p())) {
    throw InvalidPlaintext("plaintext coefficient outside centered range mod p");
  }
  const std::int64_t q = params.q();
  Poly c = poly_convolve(pub.h(), r, q);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = (params.p() * c[i] + m.poly()[i]) % q;
    if (c[i] < 0) c[i] += q;
  }
  return Ciphertext(params, std::move(c));
}

Ciphertext encrypt(const PublicKey& pub, const Plaintext& m, RandomSource& rng) {
  const std::size_t d_r = pub.spec().d_r;
  const Poly r = rng.ternary(pub.params().n(), d_r, d_r);
  return encrypt_with_blinding(pub, m, r);
}

Poly decrypt_stage_t(const PrivateKey& priv, const Ciphertext& ct) {
  check_compatible(priv.params(), ct.params());
  return poly_convolve(ct.poly(), priv.f(), priv.params().q());
}

Plaintext decrypt(const PrivateKey& priv, const Ciphertext& ct) {
  const RingParams& params = priv.params();
  const Poly t = decrypt_stage_t(priv, ct);
  const Poly tau = reduce_mod(centered_lift(t, params.q()), params.p());
  const Poly m = poly_convolve(tau, priv.f_p(), params.p());
  return Plaintext(centered_lift(m, params.p()), params.p());
}

namespace testing {

TracedKeyPair keygen_traced(const RingParams& params, const SamplingSpec& spec,
                            RandomSource& rng) {
  spec.validate(params.n());
  SecretPart secret = sample_invertible_f(params, spec, rng);
  Poly g = sample_g(params, spec, rng);
  Poly h = poly_convolve(secret.f_q, g, params.q());
  PrivateKey priv(params, spec, std::move(secret.f), std::move(secret.f_p),
                  std::move(secret.f_q));
  PublicKey pub(params, spec, std::move(h));
  return {KeyPair{std::move(priv), std::move(pub)}, std::move(g)};
}

PublicKey regenerate_public(const PrivateKey& priv, RandomSource& rng,
                            Poly* g_out) {
  Poly g = sample_g(priv.params(), priv.spec(), rng);
  Poly h = poly_convolve(priv.f_q(), g, priv.params().q());
  if (g_out != nullptr) *g_out = std::move(g);
  return PublicKey(priv.params(), priv.spec(), std::move(h));
}

}  // namespace testing
}  // namespace ntruhe
