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

#include "ntruhe/aggsim.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "ntruhe/codec.hpp"
#include "ntruhe/errors.hpp"

namespace ntruhe::aggsim {
namespace {

constexpr std::uint64_t kKeyStream = 0;
constexpr std::uint64_t kInputStream = 1;
constexpr std::uint64_t kFirstPartyStream = 2;

std::int64_t center(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v > p / 2 ? v - p : v;
}

std::string join(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::size_t block_count(std::size_t length, std::size_t n) {
  return (length + n - 1) / n;
}

}  // namespace

std::string SimReport::to_text() const {
  std::ostringstream os;
  os << "parties=" << parties << '\n'
     << "vector_length=" << vector_length << '\n'
     << "N=" << params.n() << '\n'
     << "p=" << params.p() << '\n'
     << "q=" << params.q() << '\n'
     << "capacity=" << capacity << '\n'
     << "headroom=" << headroom() << '\n'
     << "capacity_exceeded=" << (capacity_exceeded ? "true" : "false") << '\n'
     << "blocks=" << aggregate.size() << '\n';
  for (std::size_t s = 0; s < inputs.size(); ++s) {
    os << "input[" << s << "]=" << join(inputs[s]) << '\n';
  }
  for (std::size_t b = 0; b < aggregate.size(); ++b) {
    os << "aggregate[" << b << "]=" << codec::poly_to_text(aggregate[b].poly())
       << '\n';
    os << "aggregate_summands[" << b << "]=" << aggregate[b].summands() << '\n';
  }
  os << "decrypted=" << join(decrypted) << '\n'
     << "expected=" << join(expected) << '\n'
     << "match=" << (match ? "true" : "false") << '\n';
  return os.str();
}

Party::Party(const PublicKey& pub, Vector input)
    : pub_(pub), input_(std::move(input)) {
  const std::int64_t p = pub_.params().p();
  for (std::int64_t v : input_) {
    if (center(v, p) != v) {
      throw InvalidPlaintext("party input " + std::to_string(v) +
                             " outside centered range mod p");
    }
  }
}

std::vector<Ciphertext> Party::encrypt(RandomSource& rng) const {
  const std::size_t n = pub_.params().n();
  const std::size_t blocks = block_count(input_.size(), n);
  std::vector<Ciphertext> out;
  out.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    Poly m(n);
    for (std::size_t i = 0; i < n && b * n + i < input_.size(); ++i) {
      m[i] = input_[b * n + i];
    }
    out.push_back(ntruhe::encrypt(pub_, Plaintext(std::move(m), pub_.params().p()),
                                  rng));
  }
  return out;
}

void Aggregator::accept(std::span<const Ciphertext> blocks) {
  for (const Ciphertext& ct : blocks) {
    if (!(ct.params() == pub_.params())) {
      throw IncompatibleCiphertexts("block parameters differ from public key");
    }
  }
  if (contributions_ == 0) {
    total_.assign(blocks.begin(), blocks.end());
  } else {
    if (blocks.size() != total_.size()) {
      throw IncompatibleCiphertexts("party sent a different number of blocks");
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      total_[b] = ct_add(total_[b], blocks[b]);
    }
  }
  ++contributions_;
}

const std::vector<Ciphertext>& Aggregator::total() const {
  if (contributions_ == 0) throw EmptyAggregate("no contributions received");
  return total_;
}

Vector KeyHolder::decrypt_total(std::span<const Ciphertext> blocks,
                                std::size_t length,
                                bool* capacity_exceeded) const {
  Vector out;
  out.reserve(blocks.size() * priv_.params().n());
  bool exceeded = false;
  for (const Ciphertext& ct : blocks) {
    SumDecryption d = decrypt_sum(priv_, ct);
    exceeded = exceeded || d.capacity_exceeded;
    for (Coeff c : d.sum.poly().coeffs()) out.push_back(c);
  }
  out.resize(std::min(length, out.size()));
  if (capacity_exceeded != nullptr) *capacity_exceeded = exceeded;
  return out;
}

Vector clear_sum_oracle(std::span<const Vector> vectors, std::int64_t p) {
  if (vectors.empty()) throw DimensionError("clear_sum_oracle: no vectors");
  const std::size_t len = vectors.front().size();
  Vector sum(len, 0);
  for (const Vector& v : vectors) {
    if (v.size() != len) throw DimensionError("clear_sum_oracle: ragged input");
    for (std::size_t i = 0; i < len; ++i) sum[i] = center(sum[i] + v[i], p);
  }
  return sum;
}

SimReport run_simulation(const SimConfig& cfg, const KeyPair& keys,
                         std::vector<Vector> inputs,
                         RandomSource* encryption_rng) {
  if (cfg.parties == 0) throw InvalidParameters("need at least one party");
  if (cfg.vector_length == 0) throw InvalidParameters("vector length must be >= 1");
  if (inputs.size() != cfg.parties) {
    throw DimensionError("input count does not match party count");
  }
  for (const Vector& v : inputs) {
    if (v.size() != cfg.vector_length) {
      throw DimensionError("input length does not match vector_length");
    }
  }
  if (!(keys.pub.params() == cfg.params)) {
    throw InvalidParameters("keys do not match configured ring parameters");
  }

  SimReport report;
  report.parties = cfg.parties;
  report.vector_length = cfg.vector_length;
  report.params = cfg.params;
  report.capacity = capacity(cfg.params, cfg.spec);
  if (report.headroom() < 0 && !cfg.force) {
    throw CapacityExceeded(std::to_string(cfg.parties) +
                           " parties exceed capacity " +
                           std::to_string(report.capacity));
  }

  std::vector<Party> parties;
  parties.reserve(cfg.parties);
  for (Vector& v : inputs) parties.emplace_back(keys.pub, v);

  // Each party draws from its own stream, so the parallel and sequential
  // paths produce identical ciphertexts.
  std::vector<std::vector<Ciphertext>> sent(cfg.parties);
  if (encryption_rng != nullptr) {
    for (std::size_t s = 0; s < cfg.parties; ++s) {
      sent[s] = parties[s].encrypt(*encryption_rng);
    }
  } else {
    const std::size_t workers = std::clamp<std::size_t>(
        std::thread::hardware_concurrency(), 1, cfg.parties);
    std::vector<std::future<void>> jobs;
    jobs.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t s = w; s < cfg.parties; s += workers) {
          SeededRandom rng(derive_seed(cfg.seed, kFirstPartyStream + s));
          sent[s] = parties[s].encrypt(rng);
        }
      }));
    }
    for (auto& job : jobs) job.get();
  }

  Aggregator aggregator(keys.pub);
  for (const auto& blocks : sent) aggregator.accept(blocks);
  report.aggregate = aggregator.total();

  KeyHolder holder(keys.priv);
  report.decrypted = holder.decrypt_total(report.aggregate, cfg.vector_length,
                                          &report.capacity_exceeded);
  report.expected = clear_sum_oracle(inputs, cfg.params.p());
  report.inputs = std::move(inputs);
  report.match = report.decrypted == report.expected;
  return report;
}

SimReport run_simulation(const SimConfig& cfg) {
  cfg.spec.validate(cfg.params.n());
  SeededRandom key_rng(derive_seed(cfg.seed, kKeyStream));
  KeyPair keys = keygen(cfg.params, cfg.spec, key_rng);

  SeededRandom input_rng(derive_seed(cfg.seed, kInputStream));
  const std::int64_t p = cfg.params.p();
  std::vector<Vector> inputs(cfg.parties, Vector(cfg.vector_length));
  for (Vector& v : inputs) {
    for (std::int64_t& x : v) {
      x = center(static_cast<std::int64_t>(input_rng.uniform(p)), p);
    }
  }
  return run_simulation(cfg, keys, std::move(inputs));
}

}  // namespace ntruhe::aggsim
