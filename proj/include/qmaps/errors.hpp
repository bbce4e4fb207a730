// Copyright 2026 The qmaps Authors
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

namespace qmaps {

/// Raised when operand dimensions do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a parameter lies outside the domain of a map or state family.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the Jacobi eigensolver when the sweep budget is exhausted.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value failed one of its structural invariants (Hermiticity, trace,
/// positivity, ...). Carries the name of the violated invariant and the
/// numeric amount by which it was missed.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string invariant, double margin, const std::string& detail)
      : std::invalid_argument(invariant + ": " + detail),
        invariant_(std::move(invariant)),
        margin_(margin) {}

  const std::string& invariant() const noexcept { return invariant_; }
  double margin() const noexcept { return margin_; }

 private:
  std::string invariant_;
  double margin_;
};

}  // namespace qmaps
