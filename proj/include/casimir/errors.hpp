// Copyright (c) 2026 The casimir-saturation authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

  class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

  /// A dielectric model with non-finite or unphysical parameters.
  class InvalidModelError : public Error {
  public:
    using Error::Error;
  };

  /// Argument outside the domain of an operation (negative frequency, d <= 0, ...).
  class DomainError : public Error {
  public:
    using Error::Error;
  };

  /// Vanishing Fresnel denominator.
  class SingularInterfaceError : public Error {
  public:
    using Error::Error;
  };

  class ConfigError : public Error {
  public:
    using Error::Error;
  };

  /// Quadrature or series budget exhausted. Carries the best partial value.
  class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string &what, double partial, double est_rel_error)
       : Error(what), partial_(partial), est_rel_error_(est_rel_error) {}

    double partial() const { return partial_; }
    double est_rel_error() const { return est_rel_error_; }

  private:
    double partial_;
    double est_rel_error_;
  };

} // namespace casimir
