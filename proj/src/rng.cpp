// SPDX-License-Identifier: Apache-2.0
//
// uavsv: UWB air-to-ground channel modelling toolkit
// Copyright (C) 2026 The uavsv authors
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

#include "uavsv/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavsv
{
    std::uint64_t mix64(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index)
    {
        return mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
    }

    double RandomStream::uniform()
    {
        // Midpoint of one of 2^53 equal cells, never exactly 0 or 1
        const std::uint64_t k = engine_() >> 11;
        return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
    }

    double RandomStream::exponential(double rate)
    {
        if (!(rate > 0.0))
            throw std::invalid_argument("Exponential rate must be positive.");
        return -std::log(uniform()) / rate;
    }

    double RandomStream::rayleigh(double mean_square)
    {
        if (mean_square < 0.0)
            throw std::invalid_argument("Mean-square amplitude cannot be negative.");
        return std::sqrt(-mean_square * std::log(uniform()));
    }

    double RandomStream::phase()
    {
        return 2.0 * std::numbers::pi * uniform();
    }
}
