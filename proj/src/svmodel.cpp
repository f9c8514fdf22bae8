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

#include "uavsv/svmodel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavsv
{
    void SynthesisOptions::validate() const
    {
        if (!(window_ns > 0.0) || !std::isfinite(window_ns))
            throw std::invalid_argument("Window must be a positive duration.");
        if (!(sample_spacing_ns > 0.0) || !std::isfinite(sample_spacing_ns))
            throw std::invalid_argument("Sample spacing must be positive.");
    }

    std::size_t SynthesisOptions::capacity() const
    {
        return static_cast<std::size_t>(std::lround(window_ns / sample_spacing_ns)) + 1;
    }

    void Cir::validate() const
    {
        if (!(sample_spacing_ns > 0.0) || !std::isfinite(sample_spacing_ns))
            throw std::invalid_argument("Sample spacing must be positive.");
        if (!(window_ns > 0.0) || !std::isfinite(window_ns))
            throw std::invalid_argument("Window must be a positive duration.");
        double prev = -std::numeric_limits<double>::infinity();
        for (const auto &t : taps)
        {
            if (!(t.delay_ns >= 0.0) || t.delay_ns > window_ns)
                throw std::invalid_argument("Tap delay outside [0, window].");
            if (!(t.delay_ns > prev))
                throw std::invalid_argument("Tap delays must be strictly increasing.");
            if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag()))
                throw std::invalid_argument("Tap amplitude must be finite.");
            prev = t.delay_ns;
        }
    }

    namespace
    {
        // Poisson arrivals on [0, limit) starting with a pinned event at 0.
        std::vector<double> poisson_arrivals(double rate, RandomStream &rng, double limit, std::size_t capacity)
        {
            std::vector<double> out{0.0};
            double t = 0.0;
            while (out.size() < capacity)
            {
                double next = t + rng.exponential(rate);
                if (!(next > t))
                    next = std::nextafter(t, std::numeric_limits<double>::infinity());
                if (next >= limit)
                    break;
                out.push_back(next);
                t = next;
            }
            return out;
        }
    }

    std::vector<double> sample_cluster_arrivals(const SVParams &params, RandomStream &rng, const SynthesisOptions &opts)
    {
        params.validate();
        opts.validate();
        return poisson_arrivals(params.chi, rng, opts.window_ns, opts.capacity());
    }

    std::vector<double> sample_mpc_arrivals(const SVParams &params, RandomStream &rng, double limit_ns,
                                            const SynthesisOptions &opts)
    {
        params.validate();
        opts.validate();
        if (!(limit_ns > 0.0))
            throw std::invalid_argument("MPC arrival limit must be positive.");
        return poisson_arrivals(params.varsigma, rng, limit_ns, opts.capacity());
    }

    double mpc_mean_power(const SVParams &params, double cluster_arrival_ns, double relative_delay_ns,
                          bool decay_as_time_constant)
    {
        if (!(cluster_arrival_ns >= 0.0) || !(relative_delay_ns >= 0.0))
            throw std::invalid_argument("Delays must be non-negative.");
        if (!decay_as_time_constant)
            return params.omega00 * std::exp(-cluster_arrival_ns * params.eta) *
                   std::exp(-relative_delay_ns * params.gamma);

        // A zero time constant means the power is gone after any positive delay
        auto factor = [](double t, double tc)
        {
            if (t == 0.0)
                return 1.0;
            return tc > 0.0 ? std::exp(-t / tc) : 0.0;
        };
        return params.omega00 * factor(cluster_arrival_ns, params.eta) * factor(relative_delay_ns, params.gamma);
    }

    std::vector<ClusterDraw> draw_cluster_layout(const SVParams &params, RandomStream &rng,
                                                 const SynthesisOptions &opts)
    {
        const auto arrivals = sample_cluster_arrivals(params, rng, opts);
        std::vector<ClusterDraw> out;
        out.reserve(arrivals.size());
        for (std::size_t l = 0; l < arrivals.size(); ++l)
        {
            const double start = arrivals[l];
            const double stop = l + 1 < arrivals.size() ? arrivals[l + 1] : opts.window_ns;
            ClusterDraw c;
            c.arrival_ns = start;
            c.mpc_delays_ns = sample_mpc_arrivals(params, rng, stop - start, opts);
            // Absolute delays must stay below the next start after rounding
            while (c.mpc_delays_ns.size() > 1 && !(start + c.mpc_delays_ns.back() < stop))
                c.mpc_delays_ns.pop_back();
            out.push_back(std::move(c));
        }
        return out;
    }

    Cir synthesize_cir(const SVParams &params, RandomStream &rng, const SynthesisOptions &opts)
    {
        const auto layout = draw_cluster_layout(params, rng, opts);

        Cir cir;
        cir.sample_spacing_ns = opts.sample_spacing_ns;
        cir.window_ns = opts.window_ns;
        for (const auto &c : layout)
            for (double tau : c.mpc_delays_ns)
            {
                const double power = mpc_mean_power(params, c.arrival_ns, tau, opts.decay_as_time_constant);
                Tap tap;
                tap.delay_ns = c.arrival_ns + tau;
                if (opts.amplitude == AmplitudeModel::Rayleigh)
                {
                    const double mag = rng.rayleigh(power);
                    tap.amplitude = std::polar(mag, rng.phase());
                }
                else
                    tap.amplitude = std::sqrt(power);
                cir.taps.push_back(tap);
            }
        return cir;
    }

    std::vector<Cir> synthesize_ensemble(const SVParams &params, std::size_t n_scans, std::uint64_t seed,
                                         const SynthesisOptions &opts, unsigned threads,
                                         std::optional<ScenarioKey> key)
    {
        if (n_scans == 0)
            throw std::invalid_argument("At least one scan is required.");
        params.validate();
        opts.validate();

        std::vector<Cir> out(n_scans);
        parallel_for(n_scans, threads,
                     [&](std::size_t i)
                     {
                         RandomStream rng = RandomStream::substream(seed, i);
                         Cir cir = synthesize_cir(params, rng, opts);
                         cir.meta = CirMeta{seed, i, key};
                         out[i] = std::move(cir);
                     });
        return out;
    }
}
