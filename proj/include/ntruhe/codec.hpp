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

// Encodings: "a_0||a_1||...||a_{N-1}" coefficient text, byte strings packed
// into plaintext blocks, and the binary key/ciphertext blobs described in
// docs/formats.md.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ntruhe/ntru.hpp"

namespace ntruhe::codec {

using Bytes = std::vector<std::uint8_t>;

// --- coefficient text -------------------------------------------------------

std::string poly_to_text(const Poly& a);

// Exactly n signed decimal fields separated by "||". Throws ParseError on a
// wrong field count or malformed field, InvalidParameters if n < 2.
Poly text_to_poly(std::string_view s, std::size_t n);

// --- byte packing -----------------------------------------------------------

// Default upper bound on block count accepted by pack_bytes.
inline constexpr std::size_t kDefaultMaxBlocks = std::size_t{1} << 20;

// Base-p digits needed per byte: smallest k with p^k >= 256 (6 for p = 3).
int digits_per_byte(std::int64_t p);

// Encodes `data` as a digit stream: the byte length as an unsigned LEB128
// varint, then the data bytes, each byte written as digits_per_byte(p)
// big-endian base-p digits mapped to centered form. The stream is cut into
// N-digit blocks and the last block zero-padded. Throws MessageTooLong past
// max_blocks.
std::vector<Plaintext> pack_bytes(std::span<const std::uint8_t> data,
                                  const RingParams& params,
                                  std::size_t max_blocks = kDefaultMaxBlocks);

// Inverse of pack_bytes. Throws ParseError on a truncated stream, a digit
// that does not decode to a byte, or nonzero padding.
Bytes unpack_bytes(std::span<const Plaintext> blocks, const RingParams& params);

// --- binary blobs -----------------------------------------------------------

inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr char kMagic[8] = {'N', 'T', 'R', 'U', 'A', 'H', 'E', '\0'};

enum class Role : std::uint8_t {
  kPrivateKey = 1,
  kPublicKey = 2,
  kCiphertext = 3,
};

Bytes serialize(const PrivateKey& key);
Bytes serialize(const PublicKey& key);
Bytes serialize(const Ciphertext& ct);

// Each throws DeserializeError (with the offending byte offset) on bad
// magic, unknown version, wrong role, truncation, trailing bytes, invalid
// parameters or a key/ciphertext that fails its own invariants.
PrivateKey deserialize_private_key(std::span<const std::uint8_t> bytes);
PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes);
Ciphertext deserialize_ciphertext(std::span<const std::uint8_t> bytes);

// Ciphertext files hold one blob per block, back to back.
Bytes serialize_ciphertexts(std::span<const Ciphertext> cts);
std::vector<Ciphertext> deserialize_ciphertexts(
    std::span<const std::uint8_t> bytes);

// Role byte of a blob without parsing the rest; throws DeserializeError.
Role peek_role(std::span<const std::uint8_t> bytes);

}  // namespace ntruhe::codec
