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

#include <cstdint>
#include <random>

namespace ntn
{

/// Seeded random stream used by every stochastic model in the library.
///
/// Wraps std::mt19937_64 and implements its own uniform and normal transforms:
/// the std distributions are implementation defined, which would make output
/// differ between standard libraries for the same seed.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed = 0) : m_engine(seed), m_seed(seed) {}

    std::uint64_t seed() const { return m_seed; }
    std::uint64_t next() { return m_engine(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform on (0, 1), safe to pass to log().
    double uniform_open() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
    /// Standard normal via Box-Muller; always consumes two draws.
    double normal();
    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    /// Independent stream derived from this seed and a stream index.
    Rng fork(std::uint64_t stream) const;

  private:
    std::mt19937_64 m_engine;
    std::uint64_t m_seed;
};

} // namespace ntn
