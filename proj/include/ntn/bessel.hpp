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

namespace ntn
{

/// Bessel function of the first kind, order one, absolute error below 1e-12.
///
/// Ascending series for |x| <= 8, Miller backward recurrence up to 25 and the
/// Hankel asymptotic expansion beyond.
double bessel_j1(double x);

/// First positive zero of J1.
inline constexpr double kBesselJ1FirstZero = 3.8317059702075125;

} // namespace ntn
