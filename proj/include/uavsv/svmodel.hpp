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

#ifndef UAVSV_SVMODEL_HPP
#define UAVSV_SVMODEL_HPP

#include "uavsv/catalog.hpp"
#include "uavsv/rng.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace uavsv
{
    inline constexpr double kDefaultSampleSpacingNs = 0.06;
    inline constexpr double kDefaultWindowNs = 100.0;
    inline constexpr std::size_t kDefaultScans = 50;

    enum class AmplitudeModel
    {
        Rayleigh,     // Rayleigh magnitude with the SV mean square, uniform phase
        Deterministic // Magnitude sqrt(mean power), zero phase
    };

    struct SynthesisOptions
    {
        AmplitudeModel amplitude = AmplitudeModel::Rayleigh;
        bool decay_as_time_constant = false; // Read eta and gamma as time constants in ns
        double window_ns = kDefaultWindowNs;
        double sample_spacing_ns = kDefaultSampleSpacingNs;

        void validate() const; // throws std::invalid_argument

        // Upper bound on arrivals any one sampler emits: one per grid sample.
        std::size_t capacity() const;
    };

    struct Tap
    {
        double delay_ns = 0.0;
        std::complex<double> amplitude;
        bool operator==(const Tap &) const = default;
    };

    struct CirMeta
    {
        std::uint64_t seed = 0;
        std::uint64_t scan_index = 0;
        std::optional<ScenarioKey> key;
        bool operator==(const CirMeta &) const = default;
    };

    // Tap-delay channel impulse response.
    struct Cir
    {
        std::vector<Tap> taps; // Strictly increasing delays in [0, window_ns]
        double sample_spacing_ns = kDefaultSampleSpacingNs;
        double window_ns = kDefaultWindowNs;
        std::optional<CirMeta> meta;

        void validate() const; // throws std::invalid_argument
        bool operator==(const Cir &) const = default;
    };

    // Cluster arrival times: T_0 = 0, then i.i.d. Exponential(chi) gaps until the window ends.
    std::vector<double> sample_cluster_arrivals(const SVParams &params, RandomStream &rng,
                                                const SynthesisOptions &opts = {});

    // Relative MPC delays inside one cluster: tau_0 = 0, then Exponential(varsigma) gaps while
    // tau < limit_ns.
    std::vector<double> sample_mpc_arrivals(const SVParams &params, RandomStream &rng, double limit_ns,
                                            const SynthesisOptions &opts = {});

    // omega00 * exp(-T eta) * exp(-tau gamma), or with divisions when decay_as_time_constant is set.
    double mpc_mean_power(const SVParams &params, double cluster_arrival_ns, double relative_delay_ns,
                          bool decay_as_time_constant = false);

    struct ClusterDraw
    {
        double arrival_ns = 0.0;
        std::vector<double> mpc_delays_ns; // Relative to arrival_ns
    };

    // Arrival layout of one scan. Each cluster's MPCs stop before the next cluster starts.
    std::vector<ClusterDraw> draw_cluster_layout(const SVParams &params, RandomStream &rng,
                                                 const SynthesisOptions &opts = {});

    Cir synthesize_cir(const SVParams &params, RandomStream &rng, const SynthesisOptions &opts = {});

    // Scan i is drawn from RandomStream::substream(seed, i), so the result does not depend on
    // `threads`. threads == 0 picks the hardware concurrency.
    std::vector<Cir> synthesize_ensemble(const SVParams &params, std::size_t n_scans, std::uint64_t seed,
                                         const SynthesisOptions &opts = {}, unsigned threads = 1,
                                         std::optional<ScenarioKey> key = std::nullopt);

    // Runs fn(i) for i in [0, n) on up to `threads` workers. Exceptions are rethrown after join.
    template <typename Fn>
    void parallel_for(std::size_t n, unsigned threads, Fn &&fn);
}

#include "uavsv/detail/parallel.hpp"

#endif
