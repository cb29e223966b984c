// Copyright 2026 The wvphase Authors
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

namespace wvphase {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, bad index, unparsable file, violated
/// precondition on a parameter.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input for which the requested quantity is undefined, e.g. an
/// orthogonal post-selection or a fiducial whose orbit is not equiangular.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace wvphase
