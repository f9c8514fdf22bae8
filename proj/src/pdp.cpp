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
#include <complex>
#include <stdexcept>

namespace uavsv
{
    double Pdp::peak_power() const
    {
        double peak = 0.0;
        for (const auto &b : bins)
            peak = std::max(peak, b.power);
        return peak;
    }

    Pdp Pdp::normalized() const
    {
        const double peak = peak_power();
        if (!(peak > 0.0))
            throw std::invalid_argument("Cannot normalize a PDP without positive power.");
        Pdp out = *this;
        for (auto &b : out.bins)
            b.power /= peak;
        out.normalization = PdpNormalization::PeakNormalized;
        return out;
    }

    Pdp compute_pdp(std::span<const Cir> scans)
    {
        if (scans.empty())
            throw std::invalid_argument("A PDP needs at least one scan.");

        const double spacing = scans.front().sample_spacing_ns;
        const double window = scans.front().window_ns;
        for (const auto &s : scans)
        {
            if (s.sample_spacing_ns != spacing || s.window_ns != window)
                throw std::invalid_argument("Scans must share sample spacing and window.");
            s.validate();
        }

        const std::size_t n_bins = static_cast<std::size_t>(std::lround(window / spacing)) + 1;
        std::vector<double> acc(n_bins, 0.0);
        std::vector<std::complex<double>> h(n_bins);
        for (const auto &s : scans)
        {
            std::fill(h.begin(), h.end(), std::complex<double>{});
            for (const auto &t : s.taps)
            {
                const auto k = std::min<std::size_t>(static_cast<std::size_t>(std::lround(t.delay_ns / spacing)), n_bins - 1);
                h[k] += t.amplitude;
            }
            for (std::size_t k = 0; k < n_bins; ++k)
                acc[k] += std::norm(h[k]);
        }

        Pdp pdp;
        pdp.n_scans = scans.size();
        pdp.sample_spacing_ns = spacing;
        pdp.bins.resize(n_bins);
        const double n = static_cast<double>(scans.size());
        for (std::size_t k = 0; k < n_bins; ++k)
            pdp.bins[k] = {static_cast<double>(k) * spacing, acc[k] / n};
        return pdp;
    }

    PdpDb pdp_to_db(const Pdp &pdp, double dynamic_range_db)
    {
        if (!(dynamic_range_db > 0.0))
            throw std::invalid_argument("Dynamic range must be positive.");
        const double peak = pdp.peak_power();
        if (!(peak > 0.0))
            throw std::invalid_argument("PDP has no positive power.");

        PdpDb out;
        out.floor_db = 10.0 * std::log10(peak) - dynamic_range_db;
        const std::size_t n = pdp.bins.size();
        out.delay_ns.resize(n);
        out.power_db.resize(n);
        out.floored.resize(n);
        for (std::size_t k = 0; k < n; ++k)
        {
            out.delay_ns[k] = pdp.bins[k].delay_ns;
            const double p = pdp.bins[k].power;
            const double db = p > 0.0 ? 10.0 * std::log10(p) : out.floor_db;
            out.floored[k] = !(db > out.floor_db);
            out.power_db[k] = out.floored[k] ? out.floor_db : db;
        }
        return out;
    }
}
