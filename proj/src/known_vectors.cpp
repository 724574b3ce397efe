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

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "ntruhe/ahe.hpp"
#include "ntruhe/codec.hpp"
#include "ntruhe/errors.hpp"
#include "ntruhe/rsa.hpp"

namespace ntruhe::known {
namespace {

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void expect(const std::string& label, const std::string& expected,
              const std::function<std::string()>& compute) {
    std::string actual;
    try {
      actual = compute();
    } catch (const std::exception& e) {
      actual = std::string("<error: ") + e.what() + ">";
    }
    if (actual == expected) {
      out_ << "PASS " << label << '\n';
    } else {
      ok_ = false;
      out_ << "FAIL " << label << " expected=" << expected
           << " actual=" << actual << '\n';
    }
  }

  void expect_poly(const std::string& label, const Poly& expected,
                   const std::function<Poly()>& compute) {
    expect(label, codec::poly_to_text(expected),
           [&] { return codec::poly_to_text(compute()); });
  }

  bool ok() const noexcept { return ok_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

}  // namespace

KeyPair fixture_keys(const NtruVectors& v) {
  const RingParams params = v.params();
  return KeyPair{PrivateKey(params, v.spec, v.f, v.f_p, v.f_q),
                 PublicKey(params, v.spec, v.h)};
}

Ciphertext fixture_c1(const NtruVectors& v) {
  return Ciphertext(v.params(), v.c1, 1);
}

Ciphertext fixture_c2(const NtruVectors& v) {
  return Ciphertext(v.params(), v.c2, 1);
}

bool check_ntru(const NtruVectors& v, std::ostream& out) {
  Checker check(out);
  const RingParams params = v.params();

  check.expect_poly("keygen F_p = f^-1 mod p", v.f_p,
                    [&] { return inverse_mod(v.f, params.p_factor()); });
  check.expect_poly("keygen F_q = f^-1 mod q", v.f_q,
                    [&] { return inverse_mod(v.f, params.q_factor()); });
  check.expect_poly("keygen h = F_q * g mod q", v.h,
                    [&] { return poly_convolve(v.f_q, v.g, params.q()); });
  check.expect_poly("keygen with scripted f, g", v.h, [&] {
    ScriptedRandom rng;
    rng.push_poly(v.f).push_poly(v.g);
    KeyPair keys = keygen(params, v.spec, rng);
    if (keys.priv.f_p() != v.f_p || keys.priv.f_q() != v.f_q) {
      throw Error("private key differs: F_p=" +
                  codec::poly_to_text(keys.priv.f_p()) +
                  " F_q=" + codec::poly_to_text(keys.priv.f_q()));
    }
    return keys.pub.h();
  });

  // Everything below uses the fixture keys so one bad value does not cascade.
  std::optional<KeyPair> fixture;
  try {
    fixture = fixture_keys(v);
    (void)fixture_c1(v);
    (void)fixture_c2(v);
  } catch (const Error& e) {
    out << "FAIL fixture keys/ciphertexts rejected: " << e.what() << '\n';
    return false;
  }
  const KeyPair& keys = *fixture;
  const Ciphertext c1 = fixture_c1(v);
  const Ciphertext c2 = fixture_c2(v);

  check.expect_poly("encrypt c1 = p h r1 + m1 mod q", v.c1, [&] {
    ScriptedRandom rng;
    rng.push_poly(v.r1);
    return encrypt(keys.pub, Plaintext(v.m1, v.p), rng).poly();
  });
  check.expect_poly("decrypt t1 = c1 * f mod q", v.t1,
                    [&] { return decrypt_stage_t(keys.priv, c1); });
  check.expect_poly("decrypt t1 centered mod q", v.t1_centered,
                    [&] { return centered_lift(v.t1, v.q); });
  check.expect_poly("decrypt tau1 = t1 mod p", v.tau1,
                    [&] { return reduce_mod(v.t1_centered, v.p); });
  check.expect_poly("decrypt m1 = tau1 * F_p mod p", v.m1,
                    [&] { return decrypt(keys.priv, c1).poly(); });

  check.expect_poly("encrypt c2 = p h r2 + m2 mod q", v.c2, [&] {
    ScriptedRandom rng;
    rng.push_poly(v.r2);
    return encrypt(keys.pub, Plaintext(v.m2, v.p), rng).poly();
  });
  check.expect_poly("add C = c1 + c2 mod q", v.sum_ct,
                    [&] { return ct_add(c1, c2).poly(); });
  check.expect("add C summands", "2",
               [&] { return std::to_string(ct_add(c1, c2).summands()); });

  const Ciphertext sum(params, v.sum_ct, 2);
  check.expect_poly("decrypt_sum C * f centered mod q", v.sum_t_centered, [&] {
    return centered_lift(decrypt_stage_t(keys.priv, sum), v.q);
  });
  check.expect_poly("decrypt_sum tau = (C * f) mod p", v.sum_tau,
                    [&] { return reduce_mod(v.sum_t_centered, v.p); });
  check.expect_poly("decrypt_sum = m1 + m2", v.sum_m, [&] {
    SumDecryption d = decrypt_sum(keys.priv, sum);
    if (d.capacity_exceeded) throw Error("capacity flagged");
    return d.sum.poly();
  });
  return check.ok();
}

bool check_rsa(const RsaVectors& v, std::ostream& out) {
  Checker check(out);
  const rsa::RsaKeys keys{v.kappa, v.xi, v.zeta};
  check.expect("rsa keys from primes",
               std::to_string(v.kappa) + "," + std::to_string(v.xi) + "," +
                   std::to_string(v.zeta),
               [&] {
                 rsa::RsaKeys k = rsa::keys_from_primes(v.prime1, v.prime2);
                 return std::to_string(k.kappa) + "," + std::to_string(k.xi) +
                        "," + std::to_string(k.zeta);
               });
  check.expect("rsa encrypt a1", std::to_string(v.c1),
               [&] { return std::to_string(rsa::encrypt(keys, v.a1)); });
  check.expect("rsa encrypt a2", std::to_string(v.c2),
               [&] { return std::to_string(rsa::encrypt(keys, v.a2)); });
  check.expect("rsa ct_mul c1 * c2", std::to_string(v.product), [&] {
    const std::array<std::uint64_t, 2> cs{v.c1, v.c2};
    return std::to_string(rsa::ct_mul(keys, cs));
  });
  check.expect("rsa decrypt product", std::to_string(v.decrypted),
               [&] { return std::to_string(rsa::decrypt(keys, v.product)); });
  check.expect("rsa product = a1 * a2", std::to_string(v.decrypted),
               [&] { return std::to_string(v.a1 * v.a2); });
  return check.ok();
}

bool check_all(const NtruVectors& ntru, const RsaVectors& rsa,
               std::ostream& out) {
  const bool a = check_ntru(ntru, out);
  const bool b = check_rsa(rsa, out);
  return a && b;
}

}  // namespace ntruhe::known
