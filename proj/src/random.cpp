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

#include "ntruhe/random.hpp"

#include <sys/random.h>

#include <cerrno>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>
#include <system_error>

namespace ntruhe {

std::uint64_t RandomSource::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform: bound must be > 0");
  // Largest multiple of bound that fits; reject above it.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v <= limit) return v % bound;
  }
}

Poly RandomSource::ternary(std::size_t n, std::size_t plus, std::size_t minus) {
  if (plus + minus > n) {
    throw std::invalid_argument("ternary: more nonzero coefficients than N");
  }
  Poly out(n);
  for (std::size_t i = 0; i < plus; ++i) out[i] = 1;
  for (std::size_t i = plus; i < plus + minus; ++i) out[i] = -1;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = uniform(i);
    std::swap(out[i - 1], out[j]);
  }
  return out;
}

std::uint64_t SecureRandom::next_u64() {
  std::uint64_t v = 0;
  auto* p = reinterpret_cast<unsigned char*>(&v);
  std::size_t got = 0;
  while (got < sizeof(v)) {
    const ssize_t r = getrandom(p + got, sizeof(v) - got, 0);
    if (r < 0) {
      if (errno == EINTR) continue;
      throw std::system_error(errno, std::generic_category(), "getrandom");
    }
    got += static_cast<std::size_t>(r);
  }
  return v;
}

ScriptedRandom& ScriptedRandom::push_poly(Poly p) {
  polys_.push_back(std::move(p));
  return *this;
}

ScriptedRandom& ScriptedRandom::push_u64(std::uint64_t v) {
  words_.push_back(v);
  return *this;
}

std::uint64_t ScriptedRandom::next_u64() {
  if (words_.empty()) throw std::logic_error("ScriptedRandom: no words left");
  const std::uint64_t v = words_.front();
  words_.pop_front();
  return v;
}

Poly ScriptedRandom::ternary(std::size_t n, std::size_t plus,
                             std::size_t minus) {
  if (polys_.empty()) {
    throw std::logic_error("ScriptedRandom: no polynomials left");
  }
  Poly p = std::move(polys_.front());
  polys_.pop_front();
  std::size_t ones = 0;
  std::size_t neg = 0;
  for (Coeff c : p.coeffs()) {
    if (c == 1) ++ones;
    if (c == -1) ++neg;
    if (c < -1 || c > 1) {
      throw std::logic_error("ScriptedRandom: scripted polynomial not ternary");
    }
  }
  if (p.size() != n || ones != plus || neg != minus) {
    throw std::logic_error(
        "ScriptedRandom: scripted polynomial does not match requested shape");
  }
  return p;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ntruhe
