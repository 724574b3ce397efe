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

#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>

#include "ntruhe/polyring.hpp"

namespace ntruhe {

// Source of randomness injected into key generation and encryption.
//
// Implementations are not required to be thread-safe; give each thread its
// own source.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual std::uint64_t next_u64() = 0;

  // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t uniform(std::uint64_t bound);

  // Length-n polynomial with exactly `plus` coefficients equal to +1 and
  // `minus` equal to -1, positions uniform (Fisher-Yates over next_u64).
  virtual Poly ternary(std::size_t n, std::size_t plus, std::size_t minus);
};

// Operating-system CSPRNG (getrandom(2)). The production default.
class SecureRandom final : public RandomSource {
 public:
  std::uint64_t next_u64() override;
};

// Reproducible stream for tests and demos: std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Not for real keys.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Replays scripted values: queued polynomials answer ternary() calls in
// order, queued words answer next_u64(). Running dry throws std::logic_error,
// as does a queued polynomial whose length or +-1 counts differ from the
// request.
class ScriptedRandom final : public RandomSource {
 public:
  ScriptedRandom& push_poly(Poly p);
  ScriptedRandom& push_u64(std::uint64_t v);

  std::uint64_t next_u64() override;
  Poly ternary(std::size_t n, std::size_t plus, std::size_t minus) override;

  std::size_t pending_polys() const noexcept { return polys_.size(); }

 private:
  std::deque<Poly> polys_;
  std::deque<std::uint64_t> words_;
};

// Mixes a base seed and a stream index into an independent seed (splitmix64
// finaliser). Used to give each simulated party its own stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace ntruhe
