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

#include "ntruhe/polyring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "ntruhe/errors.hpp"
#include "ntruhe/kernels.hpp"

namespace ntruhe {
namespace {

constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

std::int64_t mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

void check_same_size(const Poly& a, const Poly& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": length mismatch (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
}

void check_modulus(std::int64_t m) {
  if (m < 2) {
    throw InvalidParameters("modulus must be >= 2, got " + std::to_string(m));
  }
}

bool convolution_fits(std::size_t n, std::int64_t m) {
  if (m > kMaxModulus) return false;
  const __int128 bound =
      static_cast<__int128>(n) * (m - 1) * static_cast<__int128>(m - 1);
  return bound <= std::numeric_limits<std::int64_t>::max();
}

// Dense polynomials over Z_p, lowest degree first, kept trimmed so that
// back() is nonzero (the zero polynomial is empty).
using Dense = std::vector<std::int64_t>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t inv_scalar(std::int64_t a, std::int64_t p) {
  // a^(p-2) mod p
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  std::int64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

// Long division num = quot * den + rem over Z_p; den nonzero.
void divmod(const Dense& num, const Dense& den, std::int64_t p, Dense& quot,
            Dense& rem) {
  rem = num;
  quot.clear();
  if (rem.size() < den.size()) return;
  quot.assign(rem.size() - den.size() + 1, 0);
  const std::int64_t lead_inv = inv_scalar(den.back(), p);
  while (rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    const std::int64_t factor = mulmod(rem.back(), lead_inv, p);
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) {
      rem[shift + i] = mod(rem[shift + i] - mulmod(factor, den[i], p), p);
    }
    trim(rem);
  }
  trim(quot);
}

Dense mul_dense(const Dense& a, const Dense& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = mod(out[i + j] + mulmod(a[i], b[j], p), p);
    }
  }
  trim(out);
  return out;
}

Dense sub_dense(const Dense& a, const Dense& b, std::int64_t p) {
  Dense out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t x = i < a.size() ? a[i] : 0;
    const std::int64_t y = i < b.size() ? b[i] : 0;
    out[i] = mod(x - y, p);
  }
  trim(out);
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t prime = n;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      prime = d;
      break;
    }
  }
  int exponent = 0;
  while (n % prime == 0) {
    n /= prime;
    ++exponent;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{prime, exponent};
}

std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw OverflowError("checked_pow: " + std::to_string(base) + "^" +
                          std::to_string(exponent) + " exceeds int64");
    }
  }
  return result;
}

RingParams::RingParams(std::size_t n, std::int64_t p, std::int64_t q)
    : n_(n), p_(p), q_(q) {
  if (n < 2) {
    throw InvalidParameters("N must be >= 2 (x^1 - 1 gives a degenerate ring)");
  }
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidParameters("N must fit in 32 bits");
  }
  if (p < 2) throw InvalidParameters("p must be >= 2");
  if (q <= p) throw InvalidParameters("q must be greater than p");
  if (q > kMaxModulus) throw InvalidParameters("q must be below 2^31");
  if (std::gcd(p, q) != 1) {
    throw InvalidParameters("p and q must satisfy GCD(p, q) = 1; got GCD(" +
                            std::to_string(p) + ", " + std::to_string(q) +
                            ") = " + std::to_string(std::gcd(p, q)));
  }
  auto pf = as_prime_power(p);
  if (!pf) throw InvalidParameters("p must be a prime power");
  auto qf = as_prime_power(q);
  if (!qf) throw InvalidParameters("q must be a prime power");
  if (!convolution_fits(n, q)) {
    throw InvalidParameters("N * (q - 1)^2 overflows int64");
  }
  p_factor_ = *pf;
  q_factor_ = *qf;
}

Poly Poly::one(std::size_t n) {
  Poly out(n);
  if (n > 0) out[0] = 1;
  return out;
}

bool Poly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Coeff c) { return c == 0; });
}

Poly poly_add(const Poly& a, const Poly& b, std::optional<std::int64_t> modulus) {
  check_same_size(a, b, "poly_add");
  if (!modulus) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (__builtin_add_overflow(a[i], b[i], &out[i])) {
        throw OverflowError("poly_add: coefficient overflow");
      }
    }
    return out;
  }
  check_modulus(*modulus);
  const Poly ra = reduce_mod(a, *modulus);
  const Poly rb = reduce_mod(b, *modulus);
  Poly out(a.size());
  kernels::active().add_mod(ra.coeffs(), rb.coeffs(), out.coeffs(), *modulus);
  return out;
}

Poly poly_convolve(const Poly& a, const Poly& b, std::int64_t modulus) {
  check_same_size(a, b, "poly_convolve");
  check_modulus(modulus);
  if (!convolution_fits(a.size(), modulus)) {
    throw OverflowError("poly_convolve: N * (modulus - 1)^2 overflows int64");
  }
  const Poly ra = reduce_mod(a, modulus);
  const Poly rb = reduce_mod(b, modulus);
  Poly out(a.size());
  kernels::active().cyclic_convolve(ra.coeffs(), rb.coeffs(), out.coeffs());
  for (Coeff& c : out.coeffs()) c %= modulus;
  return out;
}

Poly reduce_mod(const Poly& a, std::int64_t modulus) {
  check_modulus(modulus);
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i], modulus);
  return out;
}

Poly centered_lift(const Poly& a, std::int64_t modulus) {
  const Poly r = reduce_mod(a, modulus);
  Poly out(a.size());
  kernels::active().center(r.coeffs(), out.coeffs(), modulus);
  return out;
}

bool is_centered(const Poly& a, std::int64_t modulus) {
  const std::int64_t hi = modulus / 2;
  const std::int64_t lo = hi - modulus + 1;
  return std::all_of(a.coeffs().begin(), a.coeffs().end(),
                     [&](Coeff c) { return c >= lo && c <= hi; });
}

Poly inverse_mod_prime(const Poly& a, std::int64_t prime) {
  if (!is_prime(prime)) {
    throw InvalidParameters("inverse_mod_prime: " + std::to_string(prime) +
                            " is not prime");
  }
  if (prime > kMaxModulus) {
    throw InvalidParameters("inverse_mod_prime: prime must be below 2^31");
  }
  const std::size_t n = a.size();
  if (n == 0) throw DimensionError("inverse_mod_prime: empty polynomial");

  // r0 = x^N - 1, r1 = a; track s with s_i * a == r_i (mod x^N - 1).
  Dense r0(n + 1, 0);
  r0[0] = prime - 1;
  r0[n] = 1;
  Dense r1(n);
  for (std::size_t i = 0; i < n; ++i) r1[i] = mod(a[i], prime);
  trim(r1);
  Dense s0;
  Dense s1{1};

  Dense quot;
  Dense rem;
  while (!r1.empty()) {
    divmod(r0, r1, prime, quot, rem);
    Dense s2 = sub_dense(s0, mul_dense(quot, s1, prime), prime);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) {
    throw NotInvertible("polynomial is not invertible mod " +
                        std::to_string(prime) + " in Z_p[x]/(x^N - 1)");
  }
  const std::int64_t unit_inv = inv_scalar(r0[0], prime);
  Poly out(n);
  for (std::size_t i = 0; i < s0.size(); ++i) {
    const std::size_t k = i % n;
    out[k] = mod(out[k] + mulmod(s0[i], unit_inv, prime), prime);
  }
  return out;
}

Poly inverse_mod_prime_power(const Poly& a, std::int64_t prime, int exponent) {
  if (exponent < 1) {
    throw InvalidParameters("inverse_mod_prime_power: exponent must be >= 1");
  }
  const std::int64_t target = checked_pow(prime, exponent);
  if (target > kMaxModulus) {
    throw InvalidParameters(
        "inverse_mod_prime_power: modulus must be below 2^31");
  }
  Poly b = inverse_mod_prime(a, prime);
  int reached = 1;
  while (reached < exponent) {
    reached = std::min(2 * reached, exponent);
    const std::int64_t m = checked_pow(prime, reached);
    Poly ab = poly_convolve(a, b, m);
    for (Coeff& c : ab.coeffs()) c = mod(-c, m);
    ab[0] = mod(ab[0] + 2, m);
    b = poly_convolve(b, ab, m);
  }
  return b;
}

Poly inverse_mod(const Poly& a, PrimePower modulus) {
  return inverse_mod_prime_power(a, modulus.prime, modulus.exponent);
}

}  // namespace ntruhe
