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

#include "ntruhe/ahe.hpp"

#include <string>

#include "ntruhe/errors.hpp"

namespace ntruhe {

AggregateCiphertext ct_add(const Ciphertext& a, const Ciphertext& b) {
  if (!(a.params() == b.params())) {
    throw IncompatibleCiphertexts(
        "cannot add ciphertexts under different (N, p, q)");
  }
  std::uint32_t summands = 0;
  if (__builtin_add_overflow(a.summands(), b.summands(), &summands)) {
    throw OverflowError("summand count overflow");
  }
  return Ciphertext(a.params(), poly_add(a.poly(), b.poly(), a.params().q()),
                    summands);
}

AggregateCiphertext aggregate(std::span<const Ciphertext> cts) {
  if (cts.empty()) throw EmptyAggregate("aggregate of zero ciphertexts");
  Ciphertext acc = cts.front();
  for (const Ciphertext& ct : cts.subspan(1)) acc = ct_add(acc, ct);
  return acc;
}

std::int64_t noise_bound(const RingParams& params, const SamplingSpec& spec) {
  spec.validate(params.n());
  const auto g_l1 = static_cast<std::int64_t>(2 * spec.d_g);
  const auto f_l1 = static_cast<std::int64_t>(2 * spec.d_f + 1);
  constexpr std::int64_t r_inf = 1;
  return params.p() * g_l1 * r_inf + f_l1 * (params.p() / 2);
}

std::int64_t capacity(const RingParams& params, const SamplingSpec& spec) {
  const std::int64_t bound = noise_bound(params, spec);
  const std::int64_t half = (params.q() - 1) / 2;
  if (bound >= half) {
    throw ParameterTooTight("noise bound " + std::to_string(bound) +
                            " leaves no room below floor((q - 1) / 2) = " +
                            std::to_string(half));
  }
  return half / bound;
}

SumDecryption decrypt_sum(const PrivateKey& priv,
                          const AggregateCiphertext& agg) {
  bool exceeded = false;
  try {
    exceeded = agg.summands() > capacity(priv.params(), priv.spec());
  } catch (const ParameterTooTight&) {
    exceeded = true;
  }
  return SumDecryption{decrypt(priv, agg), exceeded};
}

}  // namespace ntruhe
