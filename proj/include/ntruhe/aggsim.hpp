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

// In-process secure-aggregation simulation.
//
// Three roles, kept apart by their types:
//   Party      holds a PublicKey and one input vector, emits ciphertext blocks.
//   Aggregator holds a PublicKey only and sums ciphertext blocks. Nothing in
//              its interface accepts a PrivateKey, so aggregator code cannot
//              reach key material.
//   KeyHolder  holds the PrivateKey and decrypts only the final aggregate.
//
// Vectors longer than N are split into ceil(len / N) blocks; each block is
// aggregated independently under the same capacity bound.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ntruhe/ahe.hpp"

namespace ntruhe::aggsim {

using Vector = std::vector<std::int64_t>;

struct SimConfig {
  std::size_t parties = 2;
  std::size_t vector_length = 7;
  RingParams params{7, 3, 128};
  SamplingSpec spec{2, 2, 2};
  std::uint64_t seed = 0;
  // Run even if parties exceeds capacity.
  bool force = false;
};

struct SimReport {
  std::size_t parties = 0;
  std::size_t vector_length = 0;
  RingParams params{7, 3, 128};
  std::int64_t capacity = 0;
  std::vector<Vector> inputs;
  std::vector<Ciphertext> aggregate;
  Vector decrypted;
  Vector expected;
  bool match = false;
  bool capacity_exceeded = false;

  // capacity - parties; negative when forced past capacity.
  std::int64_t headroom() const {
    return capacity - static_cast<std::int64_t>(parties);
  }

  // Line-oriented "key=value" text; see docs/cli.md.
  std::string to_text() const;
};

class Party {
 public:
  Party(const PublicKey& pub, Vector input);

  // One ciphertext per N-element block, zero-padded.
  std::vector<Ciphertext> encrypt(RandomSource& rng) const;

 private:
  const PublicKey& pub_;
  Vector input_;
};

class Aggregator {
 public:
  explicit Aggregator(const PublicKey& pub) : pub_(pub) {}

  // Adds one party's blocks. Throws IncompatibleCiphertexts on a block-count
  // or parameter mismatch.
  void accept(std::span<const Ciphertext> blocks);

  std::size_t contributions() const noexcept { return contributions_; }

  // Throws EmptyAggregate before the first accept().
  const std::vector<Ciphertext>& total() const;

 private:
  const PublicKey& pub_;
  std::vector<Ciphertext> total_;
  std::size_t contributions_ = 0;
};

class KeyHolder {
 public:
  explicit KeyHolder(PrivateKey priv) : priv_(std::move(priv)) {}

  // First `length` coefficients of the concatenated decrypted blocks.
  Vector decrypt_total(std::span<const Ciphertext> blocks, std::size_t length,
                       bool* capacity_exceeded = nullptr) const;

 private:
  PrivateKey priv_;
};

// Element-wise sum of equal-length vectors, each entry reduced into the
// centered range mod p. Throws DimensionError on ragged input or an empty set.
Vector clear_sum_oracle(std::span<const Vector> vectors, std::int64_t p);

// Generates keys and per-party inputs from cfg.seed, then runs the protocol.
// Throws CapacityExceeded if parties > capacity and !cfg.force, and
// InvalidParameters for zero parties or zero length.
SimReport run_simulation(const SimConfig& cfg);

// Lower-level entry: caller supplies keys, inputs and the encryption
// randomness (party s draws from derive_seed(seed, s)).
// `encryption_rng`, when non-null, replaces the per-party streams and is used
// sequentially (party 0 first); used to replay known blinding polynomials.
SimReport run_simulation(const SimConfig& cfg, const KeyPair& keys,
                         std::vector<Vector> inputs,
                         RandomSource* encryption_rng = nullptr);

}  // namespace ntruhe::aggsim
