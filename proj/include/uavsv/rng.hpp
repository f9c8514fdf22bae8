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

#ifndef UAVSV_RNG_HPP
#define UAVSV_RNG_HPP

#include <cstdint>
#include <random>

namespace uavsv
{
    // SplitMix64 finalizer.
    std::uint64_t mix64(std::uint64_t z);

    // Seed of substream `index` of `seed`:
    //   mix64(seed + (index + 1) * 0x9E3779B97F4A7C15)   (mod 2^64)
    std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

    // Portable random stream. The engine is std::mt19937_64, whose output sequence is fixed by the
    // C++ standard; all variates are derived from it here rather than through <random>
    // distributions, which differ between standard library implementations.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

        static RandomStream substream(std::uint64_t seed, std::uint64_t index)
        {
            return RandomStream(substream_seed(seed, index));
        }

        // Uniform on the open interval (0, 1), 53-bit resolution.
        double uniform();

        // Exponential variate with the given rate (mean 1 / rate).
        double exponential(double rate);

        // Rayleigh amplitude with E[a^2] = mean_square.
        double rayleigh(double mean_square);

        // Uniform phase on [0, 2 pi).
        double phase();

    private:
        std::mt19937_64 engine_;
    };
}

#endif
