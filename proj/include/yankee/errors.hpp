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

#ifndef YANKEE_ERRORS_HPP
#define YANKEE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace yankee {

// Bad user input: malformed files, unsupported parameters, intractable
// valuation classes. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An explicit rank table that is incomplete or not a matroid rank function.
class MalformedMatroidError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A requested criterion that the framework cannot handle (e.g. p-mean, p=1).
class UnsupportedCriterionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An exhaustive routine was asked to run beyond its enumeration limit.
class UnsupportedSizeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A caller violated an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A runtime-checked algorithm invariant failed. Always a bug; the CLI maps
// these to exit code 1.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InternalInvariantError(message);
}

}  // namespace detail
}  // namespace yankee

#endif  // YANKEE_ERRORS_HPP
