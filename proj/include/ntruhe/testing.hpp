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

// White-box hooks for tests. Not part of the supported API: they expose the
// ephemeral g that keygen normally discards.

#include "ntruhe/ntru.hpp"

namespace ntruhe::testing {

struct TracedKeyPair {
  KeyPair keys;
  Poly g;
};

// keygen, but also returns the g used for h.
TracedKeyPair keygen_traced(const RingParams& params, const SamplingSpec& spec,
                            RandomSource& rng);

// A new public key for an existing private key under a freshly sampled g.
// Returns the key and, through `g_out` when non-null, the g used.
PublicKey regenerate_public(const PrivateKey& priv, RandomSource& rng,
                            Poly* g_out = nullptr);

}  // namespace ntruhe::testing
