// Copyright 2026 The covcode Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace covcode {

/// A caller broke a documented precondition (dimension mismatch, index out
/// of range, non-PSD input).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters describe an experiment that cannot be run (n outside the
/// desk-scale guard, alpha out of range, t not dividing n, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity failed a structural check while a run was in flight.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tol {
// Structural invariants (normalization, hermiticity, unitarity).
inline constexpr double kStructural = 1e-10;
// Derived equalities (closed form vs matrix path, duality gaps).
inline constexpr double kDerived = 1e-9;
}  // namespace tol

}  // namespace covcode
