// Copyright 2026 The polysigma Authors
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

#include <stdexcept>
#include <string>

namespace polysigma {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (bad Pauli index, block position, phase modulus, singular block).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an n-ary operation receives a factor count that is not of the
/// form l(n-1)+1.
class ArityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised when constructed data violates an invariant (unit norm, identity
/// coefficient product, malformed input).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed its product budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polysigma
