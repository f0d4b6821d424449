// SPDX-License-Identifier: Apache-2.0
//
// ntnchannel: non-terrestrial network channel model and link budget library
// Copyright (C) 2026 The ntnchannel contributors
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

namespace ntn
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the model (frequency, angle, distance...).
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// Degenerate or physically impossible geometry (below the surface, coincident nodes).
class GeometryError : public Error
{
  public:
    using Error::Error;
};

/// A table, asset or configuration file is missing, unreadable or malformed.
class ConfigError : public Error
{
  public:
    using Error::Error;
};

/// A configuration file could not be opened or is not well-formed JSON.
class ConfigReadError : public ConfigError
{
  public:
    using ConfigError::ConfigError;
};

/// A configuration file parsed but a field is missing, mistyped or out of range.
class SchemaError : public ConfigError
{
  public:
    using ConfigError::ConfigError;
};

} // namespace ntn
