// SPDX-License-Identifier: Apache-2.0
//
// rxfront - receiver front-end termination and noise analysis
// Copyright (C) 2026 The rxfront authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RXFRONT_ERROR_HPP
#define RXFRONT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rxfront
{
    // Every failure raised by the library carries one of these categories.
    // The CLI maps them one-to-one onto process exit codes.
    enum class ErrorKind
    {
        validation = 1, // domain or invariant violation in the inputs
        parse = 2,      // malformed file or scenario text
        numerical = 3,  // singular circuit, solver failure
        io = 4          // unreadable or unwritable file
    };

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &what)
            : std::runtime_error(what), kind_(kind) {}

        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
    };

    class ValidationError : public Error
    {
    public:
        explicit ValidationError(const std::string &what) : Error(ErrorKind::validation, what) {}
    };

    class ParseError : public Error
    {
    public:
        explicit ParseError(const std::string &what) : Error(ErrorKind::parse, what) {}
    };

    class NumericalError : public Error
    {
    public:
        explicit NumericalError(const std::string &what) : Error(ErrorKind::numerical, what) {}
    };

    // Zero total impedance, singular nodal matrix, singular termination.
    class SingularCircuitError : public NumericalError
    {
    public:
        explicit SingularCircuitError(const std::string &what) : NumericalError(what) {}
    };

    class IoError : public Error
    {
    public:
        explicit IoError(const std::string &what) : Error(ErrorKind::io, what) {}
    };

    namespace detail
    {
        inline void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw ValidationError(what);
        }
    }
}

#endif
