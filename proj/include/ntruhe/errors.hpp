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
#include <stdexcept>
#include <string>

namespace ntruhe {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected (N, p, q) triple or sampling spec. The CLI reports these as
// usage errors.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Coefficient accumulation would leave the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class KeygenExhausted : public Error {
 public:
  using Error::Error;
};

class InvalidPlaintext : public Error {
 public:
  using Error::Error;
};

class InvalidCiphertext : public Error {
 public:
  using Error::Error;
};

class IncompatibleCiphertexts : public Error {
 public:
  using Error::Error;
};

class EmptyAggregate : public Error {
 public:
  using Error::Error;
};

class ParameterTooTight : public Error {
 public:
  using Error::Error;
};

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MessageTooLong : public Error {
 public:
  using Error::Error;
};

class DeserializeError : public Error {
 public:
  DeserializeError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ntruhe
