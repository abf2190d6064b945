/*
   Copyright 2026 the taftnet authors

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

#ifndef TAFTNET_ERRORS_HPP
#define TAFTNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace taftnet {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct InvalidLevel : std::invalid_argument {
    explicit InvalidLevel(const std::string& what) : std::invalid_argument(what) {}
};

struct CompatibilityError : std::invalid_argument {
    explicit CompatibilityError(const std::string& what) : std::invalid_argument(what) {}
};

struct NilpotencyError : std::invalid_argument {
    explicit NilpotencyError(const std::string& what) : std::invalid_argument(what) {}
};

struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

struct DimensionBound : std::runtime_error {
    explicit DimensionBound(const std::string& what) : std::runtime_error(what) {}
};

struct NotQuasiPivotal : std::invalid_argument {
    explicit NotQuasiPivotal(const std::string& what) : std::invalid_argument(what) {}
};

struct NotTwistedPivotal : std::invalid_argument {
    explicit NotTwistedPivotal(const std::string& what) : std::invalid_argument(what) {}
};

// Internal consistency failure in an exact computation (never expected).
struct OracleError : std::logic_error {
    explicit OracleError(const std::string& what) : std::logic_error(what) {}
};

struct GroupFormatError : std::invalid_argument {
    explicit GroupFormatError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace taftnet

#endif
