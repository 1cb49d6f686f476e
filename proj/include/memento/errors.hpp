// Copyright 2026 The Memento Filter Library Authors
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

#include <stdexcept>
#include <string>

namespace memento {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An insert would push the filter past its load-factor cap, or a shift
/// would run off the end of the physical table.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A delete/rejuvenate targeted a key that is not present; signals a caller
/// contract violation.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// The bit table failed to decode; signals internal corruption or a
/// malformed serialized file.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// Serialization I/O failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A workload generator could not satisfy its constraints (e.g. no empty
/// ranges exist at the requested density).
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace memento
