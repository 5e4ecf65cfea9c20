/*
   Copyright 2026 hyperspec contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HYPERSPEC_ERRORS_HPP
#define HYPERSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperspec {

/// Base class for all library errors.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or out-of-domain input.
class domain_error : public error {
   public:
    using error::error;
};

/// A computation was refused because it would exceed a size budget.
class budget_error : public error {
   public:
    using error::error;
};

/// A factored product failed to assemble into a polynomial
/// (non-dividing denominator, fractional exponent, parity violation).
class assembly_error : public error {
   public:
    using error::error;
};

/// The brute-force oracle could not certify a result.
class oracle_error : public error {
   public:
    using error::error;
};

}  // namespace hyperspec

#endif
