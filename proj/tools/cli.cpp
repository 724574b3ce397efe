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

#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include "ntruhe/aggsim.hpp"
#include "ntruhe/ahe.hpp"
#include "ntruhe/codec.hpp"
#include "ntruhe/errors.hpp"
#include "ntruhe/known_vectors.hpp"
#include "ntruhe/rsa.hpp"

namespace ntruhe::cli {
namespace {

namespace fs = std::filesystem;
using codec::Bytes;

constexpr const char* kSeedHelp =
    "Deterministic seed (tests and demos only; omit to use the OS CSPRNG)";

class IoError : public Error {
 public:
  using Error::Error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, std::span<const std::uint8_t> data,
                bool owner_only = false) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  if (owner_only) {
    std::error_code ec;
    fs::permissions(path, fs::perms::owner_read | fs::perms::owner_write,
                    fs::perm_options::replace, ec);
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("short write to " + path);
}

void write_text(const std::optional<std::string>& path, const std::string& text,
                std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  write_file(*path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                              text.size()));
}

std::string sha256_hex(std::span<const std::uint8_t> data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  }
  return os.str();
}

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SecureRandom>();
}

struct RingOptions {
  std::size_t n = 7;
  std::int64_t p = 3;
  std::int64_t q = 128;
  std::size_t d_f = 2;
  std::size_t d_g = 2;
  std::size_t d_r = 2;

  void add_to(CLI::App& app) {
    app.add_option("--n", n, "Ring degree N")->capture_default_str();
    app.add_option("--p", p, "Plaintext modulus p")->capture_default_str();
    app.add_option("--q", q, "Ciphertext modulus q (prime power)")
        ->capture_default_str();
    app.add_option("--df", d_f, "f has d_f + 1 ones and d_f minus ones")
        ->capture_default_str();
    app.add_option("--dg", d_g, "g has d_g ones and d_g minus ones")
        ->capture_default_str();
    app.add_option("--dr", d_r, "each r has d_r ones and d_r minus ones")
        ->capture_default_str();
  }

  RingParams params() const { return RingParams(n, p, q); }

  SamplingSpec spec() const {
    SamplingSpec s{d_f, d_g, d_r};
    s.validate(n);
    return s;
  }
};

// --- subcommands ------------------------------------------------------------

struct KeygenCmd {
  RingOptions ring;
  std::optional<std::uint64_t> seed;
  std::string out_prefix;

  int run(std::ostream& out) const {
    const RingParams params = ring.params();
    const SamplingSpec spec = ring.spec();
    const std::int64_t cap = capacity(params, spec);
    auto rng = make_rng(seed);
    const KeyPair keys = keygen(params, spec, *rng);
    const Bytes pub = codec::serialize(keys.pub);
    write_file(out_prefix + ".priv", codec::serialize(keys.priv), true);
    write_file(out_prefix + ".pub", pub);
    out << "capacity=" << cap << '\n'
        << "fingerprint=" << sha256_hex(pub) << '\n'
        << "private=" << out_prefix << ".priv\n"
        << "public=" << out_prefix << ".pub\n";
    return kExitOk;
  }
};

struct EncryptCmd {
  std::string pub_path;
  std::string in_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;

  int run(std::ostream& out) const {
    const PublicKey pub = codec::deserialize_public_key(read_file(pub_path));
    const Bytes data = read_file(in_path);
    const std::vector<Plaintext> blocks = codec::pack_bytes(data, pub.params());
    auto rng = make_rng(seed);
    std::vector<Ciphertext> cts;
    cts.reserve(blocks.size());
    for (const Plaintext& m : blocks) cts.push_back(encrypt(pub, m, *rng));
    write_file(out_path, codec::serialize_ciphertexts(cts));
    out << "blocks=" << cts.size() << '\n';
    return kExitOk;
  }
};

struct DecryptCmd {
  std::string priv_path;
  std::string in_path;
  std::optional<std::string> out_path;

  int run(std::ostream& out, std::ostream& err) const {
    const PrivateKey priv = codec::deserialize_private_key(read_file(priv_path));
    const std::vector<Ciphertext> cts =
        codec::deserialize_ciphertexts(read_file(in_path));
    const bool aggregate =
        std::any_of(cts.begin(), cts.end(),
                    [](const Ciphertext& c) { return c.summands() > 1; });

    if (!aggregate) {
      std::vector<Plaintext> blocks;
      blocks.reserve(cts.size());
      for (const Ciphertext& ct : cts) blocks.push_back(decrypt(priv, ct));
      const Bytes data = codec::unpack_bytes(blocks, priv.params());
      if (out_path) {
        write_file(*out_path, data);
      } else {
        out.write(reinterpret_cast<const char*>(data.data()),
                  static_cast<std::streamsize>(data.size()));
      }
      return kExitOk;
    }

    // Summed blocks are no longer byte packings; emit the coefficient sums.
    std::string text;
    for (std::size_t b = 0; b < cts.size(); ++b) {
      const SumDecryption d = decrypt_sum(priv, cts[b]);
      if (d.capacity_exceeded) {
        err << "warning: block " << b << " sums " << cts[b].summands()
            << " ciphertexts, beyond the guaranteed capacity; result may be "
               "wrong\n";
      }
      text += codec::poly_to_text(d.sum.poly());
      text += '\n';
    }
    write_text(out_path, text, out);
    return kExitOk;
  }
};

struct AddCmd {
  std::vector<std::string> in_paths;
  std::string out_path;

  int run(std::ostream& out) const {
    std::vector<Ciphertext> total;
    for (const std::string& path : in_paths) {
      std::vector<Ciphertext> cts = codec::deserialize_ciphertexts(read_file(path));
      if (total.empty()) {
        total = std::move(cts);
        continue;
      }
      if (cts.size() != total.size()) {
        throw IncompatibleCiphertexts(path + " has " +
                                      std::to_string(cts.size()) +
                                      " blocks, expected " +
                                      std::to_string(total.size()));
      }
      for (std::size_t b = 0; b < cts.size(); ++b) {
        total[b] = ct_add(total[b], cts[b]);
      }
    }
    write_file(out_path, codec::serialize_ciphertexts(total));
    out << "blocks=" << total.size() << '\n'
        << "summands=" << total.front().summands() << '\n';
    return kExitOk;
  }
};

struct CapacityCmd {
  RingOptions ring;

  int run(std::ostream& out) const {
    out << capacity(ring.params(), ring.spec()) << '\n';
    return kExitOk;
  }
};

struct RsaDemoCmd {
  bool fixed_keys = false;
  int bits = 32;
  std::optional<std::uint64_t> seed;
  std::uint64_t a1 = 11;
  std::uint64_t a2 = 13;

  int run(std::ostream& out) const {
    rsa::RsaKeys keys{};
    if (fixed_keys) {
      keys = rsa::keys_from_primes(17, 23);
    } else {
      auto rng = make_rng(seed);
      keys = rsa::keygen(bits, *rng);
    }
    const std::uint64_t c1 = rsa::encrypt(keys, a1);
    const std::uint64_t c2 = rsa::encrypt(keys, a2);
    const std::array<std::uint64_t, 2> cs{c1, c2};
    const std::uint64_t prod = rsa::ct_mul(keys, cs);
    const std::uint64_t dec = rsa::decrypt(keys, prod);
    const bool match =
        static_cast<unsigned __int128>(a1) * a2 % keys.kappa == dec;
    out << "kappa=" << keys.kappa << '\n'
        << "xi=" << keys.xi << '\n'
        << "zeta=" << keys.zeta << '\n'
        << "e(" << a1 << ")=" << c1 << '\n'
        << "e(" << a2 << ")=" << c2 << '\n'
        << "e(" << a1 << ")*e(" << a2 << ")=" << prod << '\n'
        << "d(" << prod << ")=" << dec << '\n'
        << "expected=" << (match ? "match" : "mismatch") << '\n';
    return match ? kExitOk : kExitFailure;
  }
};

struct AggregateDemoCmd {
  RingOptions ring;
  std::size_t parties = 2;
  std::optional<std::size_t> length;
  std::optional<std::uint64_t> seed;
  bool force = false;

  int run(std::ostream& out) const {
    aggsim::SimConfig cfg;
    cfg.parties = parties;
    cfg.params = ring.params();
    cfg.spec = ring.spec();
    cfg.vector_length = length.value_or(ring.n);
    cfg.seed = seed ? *seed : SecureRandom().next_u64();
    cfg.force = force;
    const aggsim::SimReport report = aggsim::run_simulation(cfg);
    out << "seed=" << cfg.seed << '\n' << report.to_text();
    return report.match ? kExitOk : kExitFailure;
  }
};

struct VectorsCmd {
  std::optional<std::string> emit_dir;

  int run(std::ostream& out) const {
    const known::NtruVectors ntru;
    const known::RsaVectors rsa;
    const bool ok = known::check_all(ntru, rsa, out);
    if (emit_dir) {
      fs::create_directories(*emit_dir);
      const KeyPair keys = known::fixture_keys(ntru);
      const fs::path dir(*emit_dir);
      write_file((dir / "example.priv").string(), codec::serialize(keys.priv),
                 true);
      write_file((dir / "example.pub").string(), codec::serialize(keys.pub));
      const Ciphertext c1 = known::fixture_c1(ntru);
      const Ciphertext c2 = known::fixture_c2(ntru);
      write_file((dir / "c1.ct").string(), codec::serialize(c1));
      write_file((dir / "c2.ct").string(), codec::serialize(c2));
    }
    out << (ok ? "RESULT PASS" : "RESULT FAIL") << '\n';
    return ok ? kExitOk : kExitFailure;
  }
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"ntruhe: NTRU additive homomorphic encryption toolkit"};
  app.require_subcommand(1);

  KeygenCmd keygen_cmd;
  auto* keygen_app = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd.ring.add_to(*keygen_app);
  keygen_app->add_option("--seed", keygen_cmd.seed, kSeedHelp);
  keygen_app->add_option("--out-prefix", keygen_cmd.out_prefix,
                         "Writes <prefix>.priv and <prefix>.pub")
      ->required();

  EncryptCmd encrypt_cmd;
  auto* encrypt_app = app.add_subcommand("encrypt", "Encrypt a file");
  encrypt_app->add_option("--pub", encrypt_cmd.pub_path, "Public key")->required();
  encrypt_app->add_option("--in", encrypt_cmd.in_path, "Input file")->required();
  encrypt_app->add_option("--out", encrypt_cmd.out_path, "Ciphertext file")
      ->required();
  encrypt_app->add_option("--seed", encrypt_cmd.seed, kSeedHelp);

  DecryptCmd decrypt_cmd;
  auto* decrypt_app = app.add_subcommand(
      "decrypt",
      "Decrypt a ciphertext file (aggregates decrypt to coefficient text)");
  decrypt_app->add_option("--priv", decrypt_cmd.priv_path, "Private key")
      ->required();
  decrypt_app->add_option("--in", decrypt_cmd.in_path, "Ciphertext file")
      ->required();
  decrypt_app->add_option("--out", decrypt_cmd.out_path,
                          "Output file (default: stdout)");

  AddCmd add_cmd;
  auto* add_app = app.add_subcommand("add", "Homomorphically add ciphertexts");
  add_app->add_option("--in", add_cmd.in_paths, "Ciphertext files")
      ->required()
      ->expected(1, -1);
  add_app->add_option("--out", add_cmd.out_path, "Aggregate ciphertext file")
      ->required();

  CapacityCmd capacity_cmd;
  auto* capacity_app = app.add_subcommand(
      "capacity", "Print how many ciphertexts can be summed safely");
  capacity_cmd.ring.add_to(*capacity_app);

  RsaDemoCmd rsa_cmd;
  auto* rsa_app = app.add_subcommand(
      "rsa-demo", "Textbook RSA multiplicative homomorphism (insecure, toy)");
  auto* fixed_opt = rsa_app->add_flag("--fixed-paper-keys", rsa_cmd.fixed_keys,
                                      "Use kappa = 391, xi = 3, zeta = 59");
  rsa_app->add_option("--bits", rsa_cmd.bits, "Modulus size in bits (16-64)")
      ->excludes(fixed_opt)
      ->capture_default_str();
  rsa_app->add_option("--seed", rsa_cmd.seed, kSeedHelp);
  rsa_app->add_option("--a1", rsa_cmd.a1, "First plaintext")->capture_default_str();
  rsa_app->add_option("--a2", rsa_cmd.a2, "Second plaintext")->capture_default_str();

  AggregateDemoCmd agg_cmd;
  auto* agg_app = app.add_subcommand(
      "aggregate-demo", "Simulate multi-party secure aggregation");
  agg_cmd.ring.add_to(*agg_app);
  agg_app->add_option("--parties", agg_cmd.parties, "Number of parties")
      ->capture_default_str();
  agg_app->add_option("--len", agg_cmd.length,
                      "Elements per party vector (default: N)");
  agg_app->add_option("--seed", agg_cmd.seed, kSeedHelp);
  agg_app->add_flag("--force", agg_cmd.force, "Run even past capacity");

  VectorsCmd vectors_cmd;
  auto* vectors_app = app.add_subcommand(
      "vectors", "Recompute and check the built-in worked examples");
  vectors_app->add_option("--emit-dir", vectors_cmd.emit_dir,
                          "Also write the example keys and ciphertexts here");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keygen_app) return keygen_cmd.run(out);
    if (*encrypt_app) return encrypt_cmd.run(out);
    if (*decrypt_app) return decrypt_cmd.run(out, err);
    if (*add_app) return add_cmd.run(out);
    if (*capacity_app) return capacity_cmd.run(out);
    if (*rsa_app) return rsa_cmd.run(out);
    if (*agg_app) return agg_cmd.run(out);
    if (*vectors_app) return vectors_cmd.run(out);
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ntruhe::cli
