// Copyright 2026 The cyclepack Authors.
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

namespace cyclepack {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape of an input does not match its declared dimensions.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An entry lies outside its alphabet, or a tournament is not antisymmetric.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// The requested object cannot exist (odd class sizes, even tournament order,
/// non-Eulerian input where an Eulerian one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size or work limit was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An identity that must always hold failed. Always a bug in this library.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclepack
