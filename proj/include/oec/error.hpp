// Copyright 2026 The oec Authors
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

#ifndef OEC_ERROR_HPP_
#define OEC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace oec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group, action, model or series description could not be parsed or
/// does not satisfy the axioms it claims to.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An explicit enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested model is outside the supported rule tables.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace oec

#endif  // OEC_ERROR_HPP_
