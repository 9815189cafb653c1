// Copyright 2026 The qising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QISING_ERRORS_HPP_
#define QISING_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qising {

// Input violates a documented precondition (payoff ordering, grid shape, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Angle or parameter outside the mathematical domain of an operation.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Request would exceed a fixed resource bound (e.g. 2^N enumeration).
class ResourceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An internal numerical invariant broke. Never caused by user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qising

#endif  // QISING_ERRORS_HPP_
