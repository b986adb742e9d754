// Copyright 2026 The mcoutage Authors
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

#ifndef MCOUTAGE_ERROR_HPP_
#define MCOUTAGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mcoutage {

// Base of all library errors. The CLI maps the subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A user-facing specification (sweep, preset, flags) failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An iterative method failed to converge or a tolerance was not reached.
class NumericError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read, parsed, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcoutage

#endif  // MCOUTAGE_ERROR_HPP_
