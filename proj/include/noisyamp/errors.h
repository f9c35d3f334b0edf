// Copyright 2026 The noisyamp Authors
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

#ifndef NOISYAMP_ERRORS_H
#define NOISYAMP_ERRORS_H

#include <stdexcept>
#include <string>

namespace noisyamp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A formula was evaluated outside the parameter range where it is defined.
struct DomainError : Error {
    using Error::Error;
};
/// The Fock cutoff is too small for the requested state or channel output.
struct TruncationError : Error {
    using Error::Error;
};
/// A phase-space grid failed to capture the Husimi mass of a state.
struct QuadratureError : Error {
    using Error::Error;
};
/// Doubling nodes or cutoff moved a numerical average by more than requested.
struct ConvergenceError : Error {
    using Error::Error;
};
/// Negative discriminant in the circulant root formula.
struct RootError : Error {
    using Error::Error;
};
/// The thermal-ansatz parameter lies outside the admissible interval.
struct ValidityError : Error {
    using Error::Error;
};
struct NonConvergentError : Error {
    using Error::Error;
};
struct InvalidArgument : Error {
    using Error::Error;
};

}  // namespace noisyamp

#endif
