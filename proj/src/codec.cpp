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

#include "ntruhe/codec.hpp"

#include <charconv>
#include <cstring>
#include <optional>

#include "ntruhe/errors.hpp"

namespace ntruhe::codec {
namespace {

constexpr std::string_view kSeparator = "||";

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// --- digit stream -----------------------------------------------------------

void append_byte_digits(std::uint8_t byte, std::int64_t p, int k,
                        std::vector<Coeff>& out) {
  const std::size_t start = out.size();
  out.resize(start + k);
  std::int64_t v = byte;
  for (int i = k - 1; i >= 0; --i) {
    std::int64_t d = v % p;
    v /= p;
    if (d > p / 2) d -= p;
    out[start + i] = d;
  }
}

class DigitReader {
 public:
  DigitReader(std::span<const Plaintext> blocks, std::int64_t p, int k)
      : blocks_(blocks), p_(p), k_(k) {}

  std::uint8_t next_byte() {
    std::int64_t v = 0;
    for (int i = 0; i < k_; ++i) {
      std::optional<Coeff> d = next_digit();
      if (!d) throw ParseError("unpack_bytes: stream truncated");
      v = v * p_ + (*d < 0 ? *d + p_ : *d);
    }
    if (v > 255) throw ParseError("unpack_bytes: digit group exceeds a byte");
    return static_cast<std::uint8_t>(v);
  }

  bool rest_is_zero() {
    while (std::optional<Coeff> d = next_digit()) {
      if (*d != 0) return false;
    }
    return true;
  }

 private:
  std::optional<Coeff> next_digit() {
    while (block_ < blocks_.size() && pos_ >= blocks_[block_].size()) {
      ++block_;
      pos_ = 0;
    }
    if (block_ >= blocks_.size()) return std::nullopt;
    return blocks_[block_].poly()[pos_++];
  }

  std::span<const Plaintext> blocks_;
  std::int64_t p_;
  int k_;
  std::size_t block_ = 0;
  std::size_t pos_ = 0;
};

// --- binary writer / reader -------------------------------------------------

class Writer {
 public:
  void raw(const void* data, std::size_t n) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    out_.insert(out_.end(), p, p + n);
  }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void poly(const Poly& a) {
    for (Coeff c : a.coeffs()) u64(static_cast<std::uint64_t>(c));
  }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::size_t offset() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ == in_.size(); }

  void need(std::size_t n, const char* what) const {
    if (in_.size() - pos_ < n) {
      throw DeserializeError(std::string("truncated input while reading ") + what,
                             in_.size());
    }
  }
  std::uint8_t u8(const char* what) {
    need(1, what);
    return in_[pos_++];
  }
  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{in_[pos_ + i]} << (8 * i);
    pos_ += 4;
    return v;
  }
  std::uint64_t u64(const char* what) {
    need(8, what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{in_[pos_ + i]} << (8 * i);
    pos_ += 8;
    return v;
  }
  Poly poly(std::size_t n, const char* what) {
    if (n > (in_.size() - pos_) / 8) need(n * 8, what);
    Poly out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Coeff>(u64(what));
    return out;
  }
  std::span<const std::uint8_t> bytes(std::size_t n, const char* what) {
    need(n, what);
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

void write_header(Writer& w, Role role, const RingParams& params) {
  w.raw(kMagic, sizeof(kMagic));
  w.u8(kFormatVersion);
  w.u8(static_cast<std::uint8_t>(role));
  w.u32(static_cast<std::uint32_t>(params.n()));
  w.u64(static_cast<std::uint64_t>(params.p()));
  w.u64(static_cast<std::uint64_t>(params.q()));
}

void write_spec(Writer& w, const SamplingSpec& spec) {
  w.u32(static_cast<std::uint32_t>(spec.d_f));
  w.u32(static_cast<std::uint32_t>(spec.d_g));
  w.u32(static_cast<std::uint32_t>(spec.d_r));
}

Role read_role(Reader& r) {
  const std::size_t magic_at = r.offset();
  auto magic = r.bytes(sizeof(kMagic), "magic");
  if (std::memcmp(magic.data(), kMagic, sizeof(kMagic)) != 0) {
    throw DeserializeError("bad magic", magic_at);
  }
  const std::size_t version_at = r.offset();
  const std::uint8_t version = r.u8("version");
  if (version != kFormatVersion) {
    throw DeserializeError("unsupported format version " +
                               std::to_string(version),
                           version_at);
  }
  const std::size_t role_at = r.offset();
  const std::uint8_t role = r.u8("role");
  if (role < 1 || role > 3) {
    throw DeserializeError("unknown role byte " + std::to_string(role), role_at);
  }
  return static_cast<Role>(role);
}

void read_role(Reader& r, Role want) {
  const std::size_t role_at = r.offset() + sizeof(kMagic) + 1;
  const Role got = read_role(r);
  if (got != want) {
    throw DeserializeError("unexpected role byte " +
                               std::to_string(static_cast<int>(got)),
                           role_at);
  }
}

RingParams read_params(Reader& r) {
  const std::size_t at = r.offset();
  const std::uint32_t n = r.u32("N");
  const std::uint64_t p = r.u64("p");
  const std::uint64_t q = r.u64("q");
  if (p > static_cast<std::uint64_t>(INT64_MAX) ||
      q > static_cast<std::uint64_t>(INT64_MAX)) {
    throw DeserializeError("p or q out of range", at);
  }
  try {
    return RingParams(n, static_cast<std::int64_t>(p),
                      static_cast<std::int64_t>(q));
  } catch (const InvalidParameters& e) {
    throw DeserializeError(std::string("invalid ring parameters: ") + e.what(),
                           at);
  }
}

SamplingSpec read_spec(Reader& r) {
  SamplingSpec spec;
  spec.d_f = r.u32("d_f");
  spec.d_g = r.u32("d_g");
  spec.d_r = r.u32("d_r");
  return spec;
}

template <typename Fn>
auto invariants(std::size_t offset, Fn&& make) {
  try {
    return make();
  } catch (const Error& e) {
    throw DeserializeError(std::string("decoded value rejected: ") + e.what(),
                           offset);
  }
}

Ciphertext read_ciphertext(Reader& r) {
  read_role(r, Role::kCiphertext);
  RingParams params = read_params(r);
  const std::size_t body = r.offset();
  const std::uint32_t summands = r.u32("summand count");
  Poly c = r.poly(params.n(), "ciphertext coefficients");
  return invariants(body, [&] {
    return Ciphertext(params, std::move(c), summands);
  });
}

void expect_end(const Reader& r) {
  if (!r.done()) throw DeserializeError("trailing bytes", r.offset());
}

}  // namespace

std::string poly_to_text(const Poly& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += kSeparator;
    out += std::to_string(a[i]);
  }
  return out;
}

Poly text_to_poly(std::string_view s, std::size_t n) {
  if (n < 2) throw InvalidParameters("N must be >= 2");
  s = trim(s);
  std::vector<Coeff> coeffs;
  coeffs.reserve(n);
  for (;;) {
    const std::size_t cut = s.find(kSeparator);
    const std::string_view field = trim(s.substr(0, cut));
    Coeff v = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError("malformed coefficient field '" + std::string(field) +
                       "'");
    }
    coeffs.push_back(v);
    if (cut == std::string_view::npos) break;
    s.remove_prefix(cut + kSeparator.size());
  }
  if (coeffs.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " fields, got " +
                     std::to_string(coeffs.size()));
  }
  return Poly(std::move(coeffs));
}

int digits_per_byte(std::int64_t p) {
  int k = 0;
  std::int64_t reach = 1;
  while (reach < 256) {
    reach *= p;
    ++k;
  }
  return k;
}

std::vector<Plaintext> pack_bytes(std::span<const std::uint8_t> data,
                                  const RingParams& params,
                                  std::size_t max_blocks) {
  const std::int64_t p = params.p();
  const int k = digits_per_byte(p);
  const std::size_t n = params.n();

  Bytes stream;
  std::uint64_t len = data.size();
  do {
    std::uint8_t b = len & 0x7f;
    len >>= 7;
    if (len) b |= 0x80;
    stream.push_back(b);
  } while (len);

  const std::size_t total_digits = (stream.size() + data.size()) * k;
  const std::size_t blocks = (total_digits + n - 1) / n;
  if (blocks > max_blocks) {
    throw MessageTooLong("message needs " + std::to_string(blocks) +
                         " blocks, limit is " + std::to_string(max_blocks));
  }

  std::vector<Coeff> digits;
  digits.reserve(blocks * n);
  for (std::uint8_t b : stream) append_byte_digits(b, p, k, digits);
  for (std::uint8_t b : data) append_byte_digits(b, p, k, digits);
  digits.resize(blocks * n, 0);

  std::vector<Plaintext> out;
  out.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<Coeff> block(digits.begin() + b * n,
                             digits.begin() + (b + 1) * n);
    out.emplace_back(Poly(std::move(block)), p);
  }
  return out;
}

Bytes unpack_bytes(std::span<const Plaintext> blocks, const RingParams& params) {
  const std::int64_t p = params.p();
  for (const Plaintext& b : blocks) {
    if (b.size() != params.n()) {
      throw ParseError("unpack_bytes: block length does not match N");
    }
  }
  DigitReader reader(blocks, p, digits_per_byte(p));

  std::uint64_t len = 0;
  for (int shift = 0;; shift += 7) {
    if (shift > 63) throw ParseError("unpack_bytes: length prefix too long");
    const std::uint8_t b = reader.next_byte();
    len |= std::uint64_t{b & 0x7fu} << shift;
    if (!(b & 0x80)) break;
  }

  Bytes out;
  for (std::uint64_t i = 0; i < len; ++i) out.push_back(reader.next_byte());
  if (!reader.rest_is_zero()) {
    throw ParseError("unpack_bytes: nonzero padding after message");
  }
  return out;
}

Bytes serialize(const PrivateKey& key) {
  Writer w;
  write_header(w, Role::kPrivateKey, key.params());
  write_spec(w, key.spec());
  w.poly(key.f());
  w.poly(key.f_p());
  w.poly(key.f_q());
  return w.take();
}

Bytes serialize(const PublicKey& key) {
  Writer w;
  write_header(w, Role::kPublicKey, key.params());
  write_spec(w, key.spec());
  w.poly(key.h());
  return w.take();
}

Bytes serialize(const Ciphertext& ct) {
  Writer w;
  write_header(w, Role::kCiphertext, ct.params());
  w.u32(ct.summands());
  w.poly(ct.poly());
  return w.take();
}

PrivateKey deserialize_private_key(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  read_role(r, Role::kPrivateKey);
  RingParams params = read_params(r);
  SamplingSpec spec = read_spec(r);
  const std::size_t polys_at = r.offset();
  Poly f = r.poly(params.n(), "f");
  Poly f_p = r.poly(params.n(), "F_p");
  Poly f_q = r.poly(params.n(), "F_q");
  expect_end(r);
  return invariants(polys_at, [&] {
    return PrivateKey(params, spec, std::move(f), std::move(f_p),
                      std::move(f_q));
  });
}

PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  read_role(r, Role::kPublicKey);
  RingParams params = read_params(r);
  SamplingSpec spec = read_spec(r);
  const std::size_t polys_at = r.offset();
  Poly h = r.poly(params.n(), "h");
  expect_end(r);
  return invariants(polys_at,
                    [&] { return PublicKey(params, spec, std::move(h)); });
}

Ciphertext deserialize_ciphertext(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  Ciphertext ct = read_ciphertext(r);
  expect_end(r);
  return ct;
}

Bytes serialize_ciphertexts(std::span<const Ciphertext> cts) {
  Bytes out;
  for (const Ciphertext& ct : cts) {
    const Bytes one = serialize(ct);
    out.insert(out.end(), one.begin(), one.end());
  }
  return out;
}

std::vector<Ciphertext> deserialize_ciphertexts(
    std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw DeserializeError("empty ciphertext file", 0);
  Reader r(bytes);
  std::vector<Ciphertext> out;
  while (!r.done()) out.push_back(read_ciphertext(r));
  return out;
}

Role peek_role(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  return read_role(r);
}

}  // namespace ntruhe::codec
