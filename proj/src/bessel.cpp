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

#include "ntn/bessel.hpp"

#include <cmath>
#include <numbers>

namespace ntn
{

namespace
{

double
j1_series(double x)
{
    const double q = -0.25 * x * x;
    double term = 0.5 * x;
    double sum = term;
    for (int k = 1; k < 60; ++k)
    {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
        {
            break;
        }
    }
    return sum;
}

// Miller's algorithm: recur J_n downwards from an order well above x and
// normalize with J0 + 2 * sum(J_2k) = 1.
double
j1_miller(double x)
{
    const int start = 2 * ((static_cast<int>(x) + 40) / 2);
    double next = 0.0;
    double current = 1e-30;
    double j1 = 0.0;
    double norm = 0.0;
    for (int n = start; n > 0; --n)
    {
        const double previous = 2.0 * n / x * current - next;
        next = current;
        current = previous;
        // current now holds J_{n-1}
        if (n - 1 == 1)
        {
            j1 = current;
        }
        if ((n - 1) % 2 == 0 && n - 1 > 0)
        {
            norm += 2.0 * current;
        }
        if (std::abs(current) > 1e250)
        {
            current *= 1e-250;
            next *= 1e-250;
            j1 *= 1e-250;
            norm *= 1e-250;
        }
    }
    norm += current;
    return j1 / norm;
}

double
j1_asymptotic(double x)
{
    constexpr double mu = 4.0;
    double p = 0.0;
    double q = 0.0;
    double term = 1.0;
    double previous = INFINITY;
    for (int k = 0; k < 200; ++k)
    {
        if (k > 0)
        {
            const double odd = 2.0 * k - 1.0;
            term *= (mu - odd * odd) / (8.0 * k * x);
        }
        if (std::abs(term) > previous)
        {
            break;
        }
        previous = std::abs(term);
        switch (k % 4)
        {
        case 0: p += term; break;
        case 1: q += term; break;
        case 2: p -= term; break;
        default: q -= term; break;
        }
        if (std::abs(term) < 1e-17)
        {
            break;
        }
    }
    const double chi = x - 0.75 * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double
bessel_j1(double x)
{
    const double ax = std::abs(x);
    double value = 0.0;
    if (ax <= 8.0)
    {
        return j1_series(x);
    }
    if (ax <= 25.0)
    {
        value = j1_miller(ax);
    }
    else
    {
        value = j1_asymptotic(ax);
    }
    return x < 0.0 ? -value : value;
}

} // namespace ntn
