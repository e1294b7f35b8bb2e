// Copyright 2026 The selfcomp Authors
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

namespace selfcomp {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition does not hold (non-Hermitian input, non-CPTP
// channel handed to a measure, non-orthogonal basis, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operand shapes are inconsistent.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter lies outside its declared range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An iterative routine failed or a spectrum expected to be real and
// nonnegative is not, beyond tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input (channel JSON, matrix files).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace selfcomp
