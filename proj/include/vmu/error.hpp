// Copyright 2026 The vmu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace vmu {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed or out-of-range arguments: unknown vertex, bad dimensions,
// unsupported field order, parse failures.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error(message) {}
};

// The arguments are well formed but an operation's precondition does not
// hold (pivot on a non-edge, theorem bound violated). A refinement of
// InputError so callers that only care about bad input can catch one type.
class PreconditionError : public InputError {
 public:
  explicit PreconditionError(const std::string& message) : InputError(message) {}
};

// Object too large for the bit-row representation, or a size guard hit.
class ConstructionError : public Error {
 public:
  explicit ConstructionError(const std::string& message) : Error(message) {}
};

// A step of a transform sequence failed; carries the position of the step.
class SequenceError : public Error {
 public:
  SequenceError(std::size_t index, const std::string& message)
      : Error("step " + std::to_string(index) + ": " + message), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace vmu
