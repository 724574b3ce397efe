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

// Exact arithmetic in Z[x]/(x^N - 1) and its quotients Z_m[x]/(x^N - 1).
//
// Coefficients are int64. Every modular operation validates that its
// accumulators stay in range and throws OverflowError otherwise, so results
// are always exact. Nothing here is constant-time.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ntruhe {

using Coeff = std::int64_t;

// A prime power m = prime^exponent.
struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::int64_t n);

// Nullopt unless n >= 2 is a power of a single prime.
std::optional<PrimePower> as_prime_power(std::int64_t n);

// Parameters (N, p, q) of the rings R = Z[x]/(x^N - 1), R_p and R_q.
//
// Construction validates: N >= 2; 2 <= p < q; gcd(p, q) = 1; p and q prime
// powers; q < 2^31; N * (q - 1)^2 fits in int64. Throws InvalidParameters.
class RingParams {
 public:
  RingParams(std::size_t n, std::int64_t p, std::int64_t q);

  std::size_t n() const noexcept { return n_; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  PrimePower p_factor() const noexcept { return p_factor_; }
  PrimePower q_factor() const noexcept { return q_factor_; }

  friend bool operator==(const RingParams& a, const RingParams& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  std::size_t n_;
  std::int64_t p_;
  std::int64_t q_;
  PrimePower p_factor_;
  PrimePower q_factor_;
};

// Element of a convolution ring: coefficient i is the coefficient of x^i.
// The length is fixed at construction.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t n) : coeffs_(n, 0) {}
  explicit Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}
  Poly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) {}

  // The multiplicative identity 1 at length n.
  static Poly one(std::size_t n);

  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept;

  Coeff operator[](std::size_t i) const { return coeffs_[i]; }
  Coeff& operator[](std::size_t i) { return coeffs_[i]; }

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  std::span<Coeff> coeffs() noexcept { return coeffs_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

// Coefficient-wise sum. With a modulus, each coefficient lands in
// [0, modulus). Throws DimensionError on length mismatch.
Poly poly_add(const Poly& a, const Poly& b,
              std::optional<std::int64_t> modulus = std::nullopt);

// Product in Z_modulus[x]/(x^N - 1), coefficients in [0, modulus). Inputs may
// be unreduced. Throws DimensionError, and OverflowError when
// N * (modulus - 1)^2 does not fit in int64 or modulus >= 2^31.
Poly poly_convolve(const Poly& a, const Poly& b, std::int64_t modulus);

// Every coefficient into [0, modulus).
Poly reduce_mod(const Poly& a, std::int64_t modulus);

// Every coefficient to its representative in (-m/2, m/2] for even m, or
// [-(m-1)/2, (m-1)/2] for odd m. Inputs outside [0, m) are reduced first.
Poly centered_lift(const Poly& a, std::int64_t modulus);

// True if every coefficient already lies in the centered interval for m.
bool is_centered(const Poly& a, std::int64_t modulus);

// Inverse in Z_prime[x]/(x^N - 1) by the extended Euclidean algorithm on
// (a, x^N - 1). Throws NotInvertible when gcd(a, x^N - 1) is not a unit, and
// InvalidParameters if `prime` is not prime.
Poly inverse_mod_prime(const Poly& a, std::int64_t prime);

// Inverse in Z_{prime^exponent}[x]/(x^N - 1): the mod-prime inverse lifted
// with the Newton step b <- b * (2 - a * b), doubling the exponent each
// round. Throws NotInvertible if `a` is not invertible mod prime.
Poly inverse_mod_prime_power(const Poly& a, std::int64_t prime, int exponent);

// Same, taking the modulus in factored form.
Poly inverse_mod(const Poly& a, PrimePower modulus);

// Integer power; throws OverflowError beyond int64.
std::int64_t checked_pow(std::int64_t base, int exponent);

}  // namespace ntruhe
