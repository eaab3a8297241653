// SPDX-License-Identifier: Apache-2.0
//
// eigsense - eigenvalue-based spectrum sensing under correlated noise
// Copyright (C) 2026 The eigsense authors
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

namespace eigsense
{

// Argument outside the mathematical domain of an operation (negative beta, rho >= 1, ...)
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Value produced by the fractional-sampling correlation model is not a legal rho
class OutOfModelError : public DomainError
{
public:
    using DomainError::DomainError;
};

class NotPsdError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateInputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// No admissible Stieltjes root (Im S > 0) at the requested point
class NumericalBranchError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class EmptySupportError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class TableBuildError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class TableCoverageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace eigsense
