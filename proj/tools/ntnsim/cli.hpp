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

#include <iosfwd>
#include <string>

namespace ntn::cli
{

/// Process exit codes of ntnsim.
enum ExitCode : int
{
    kOk = 0,
    kInternalError = 1,
    kUsageError = 2,
    kConfigUnreadable = 3,
    kSchemaViolation = 4,
    kDomainError = 5,
    kOutputError = 6,
};

/// Runs the command line front end. CSV goes to `out` unless -o names a file;
/// diagnostics go to `err` as a single line
///   error: code=<name> message="<text>"
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fixed six-decimal rendering used for every CSV number ("-0.000000" is
/// normalized to "0.000000").
std::string format_number(double value);

} // namespace ntn::cli
