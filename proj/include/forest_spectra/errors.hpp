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

#pragma once

#include <stdexcept>
#include <string>

namespace forest_spectra {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The graph is too small to host the distinguished edges an operation needs
/// (e.g. the edge pairs {1,2},{3,4} on fewer than four vertices).
class InsufficientVertices : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A matrix does not have the block structure dictated by its edge-pair
/// classes. Signals either a bug or an input outside the supported family.
class StructureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace forest_spectra
