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

#include "uavsv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace uavsv
{
    namespace
    {
        double peak_abs(std::span<const double> x)
        {
            double m = 0.0;
            for (double v : x)
                m = std::max(m, std::abs(v));
            return m;
        }
    }

    CleanResult clean_deconvolve(std::span<const double> raw, std::span<const double> pulse,
                                 double sample_spacing_ns, const CleanOptions &opts)
    {
        if (!(sample_spacing_ns > 0.0) || !std::isfinite(sample_spacing_ns))
            throw std::invalid_argument("Sample spacing must be positive.");
        if (!(opts.stop_fraction > 0.0 && opts.stop_fraction < 1.0))
            throw std::invalid_argument("Stop fraction must lie in (0, 1).");
        if (!(peak_abs(pulse) > 0.0))
            throw std::invalid_argument("CLEAN template must be nonzero.");

        const std::size_t n = raw.size();
        const std::size_t m = pulse.size();

        CleanResult result;
        result.cir.sample_spacing_ns = sample_spacing_ns;
        result.cir.window_ns = std::max(1.0, static_cast<double>(n > 0 ? n - 1 : 0)) * sample_spacing_ns;

        std::vector<double> residual(raw.begin(), raw.end());
        const double start_peak = peak_abs(residual);
        result.residual_peak = start_peak;
        if (!(start_peak > 0.0))
        {
            result.converged = true;
            return result;
        }

        // Template energy left inside the record at each lag
        std::vector<double> energy(n, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < m && k + j < n; ++j)
                energy[k] += pulse[j] * pulse[j];

        std::map<std::size_t, double> taps;
        const double stop = opts.stop_fraction * start_peak;
        while (result.residual_peak >= stop && result.iterations < opts.max_iters)
        {
            std::size_t best_k = 0;
            double best_score = -1.0, best_c = 0.0;
            for (std::size_t k = 0; k < n; ++k)
            {
                if (!(energy[k] > 0.0))
                    continue;
                double c = 0.0;
                for (std::size_t j = 0; j < m && k + j < n; ++j)
                    c += residual[k + j] * pulse[j];
                const double score = std::abs(c) / std::sqrt(energy[k]);
                if (score > best_score) // strict: the earliest lag wins ties
                {
                    best_score = score;
                    best_k = k;
                    best_c = c;
                }
            }

            const double amp = best_c / energy[best_k];
            for (std::size_t j = 0; j < m && best_k + j < n; ++j)
                residual[best_k + j] -= amp * pulse[j];
            taps[best_k] += amp;
            ++result.iterations;
            result.residual_peak = peak_abs(residual);
        }
        result.converged = result.residual_peak < stop;

        for (const auto &[k, a] : taps)
            if (a != 0.0)
                result.cir.taps.push_back({static_cast<double>(k) * sample_spacing_ns, {a, 0.0}});
        return result;
    }
}
