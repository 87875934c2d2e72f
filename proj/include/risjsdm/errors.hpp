// SPDX-License-Identifier: Apache-2.0
//
// ris-jsdm: link-level simulator for multi-RIS channel customization with JSDM
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

#pragma once

#include <stdexcept>
#include <string>

namespace risjsdm
{

// Base class for all library errors. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument to an operation (negative variance, bad dimensions, ...).
class ParameterError : public Error
{
public:
    using Error::Error;
};

// A surface cannot be installed at the requested grid direction.
class PlacementError : public Error
{
public:
    using Error::Error;
};

// A linear system is singular or too ill-conditioned to solve reliably.
class SingularityError : public Error
{
public:
    using Error::Error;
};

// A combinatorial search would exceed its configured size cap.
class ScaleError : public Error
{
public:
    using Error::Error;
};

// A scenario or result file could not be parsed.
class ParseError : public Error
{
public:
    using Error::Error;
};

// A numeric result violated a runtime contract (non-finite values, ...).
class NumericalError : public Error
{
public:
    using Error::Error;
};

} // namespace risjsdm
