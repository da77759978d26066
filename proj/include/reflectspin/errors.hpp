// Copyright 2026 The reflectspin Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REFLECTSPIN_ERRORS_HPP
#define REFLECTSPIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reflectspin {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something that violates an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A model description violates a physical constraint (Hermitian h, real j_i).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Model would exceed the configured full-dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed model file; the message carries the offending location.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A numerical routine lost accuracy beyond its stated tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not; signals a basis or sign convention bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A constructive search guaranteed to succeed did not.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace reflectspin

#endif  // REFLECTSPIN_ERRORS_HPP
