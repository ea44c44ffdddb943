// Copyright 2026 The Authors.
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

#ifndef SFORGE_ERROR_HPP_
#define SFORGE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A precondition on the arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An invariant that a proven statement guarantees did not hold. This is
/// never expected; it is raised loudly instead of returning a bad result.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// An internal bookkeeping check failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sforge

#endif  // SFORGE_ERROR_HPP_
