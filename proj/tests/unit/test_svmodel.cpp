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

#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <cmath>
#include <numbers>

using namespace uavsv;
using Catch::Approx;

namespace
{
    SVParams row() { return catalog_lookup({Scenario::HoverOpen, Receiver::RX1, Orientation::VV, 15}); }
}

TEST_CASE("substream seeds follow SplitMix64", "[rng]")
{
    // First SplitMix64 output for state 0
    CHECK(substream_seed(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(mix64(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
    CHECK(substream_seed(7, 1) != substream_seed(7, 0));
    CHECK(substream_seed(7, 3) == mix64(7 + 4 * 0x9E3779B97F4A7C15ULL));
}

TEST_CASE("random stream variates", "[rng]")
{
    RandomStream a(42), b(42);
    for (int i = 0; i < 5; ++i)
        CHECK(a.uniform() == b.uniform());

    RandomStream r(1);
    double sum = 0.0, sum_sq = 0.0, lo = 1.0, hi = 0.0;
    constexpr int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const double u = r.uniform();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += r.exponential(0.5);
        const double a2 = r.rayleigh(3.0);
        sum_sq += a2 * a2;
    }
    CHECK(lo > 0.0);
    CHECK(hi < 1.0);
    CHECK(sum / n == Approx(2.0).epsilon(0.02));
    CHECK(sum_sq / n == Approx(3.0).epsilon(0.02));

    RandomStream p(9);
    for (int i = 0; i < 1000; ++i)
    {
        const double ph = p.phase();
        REQUIRE(ph >= 0.0);
        REQUIRE(ph < 2.0 * std::numbers::pi);
    }
}

TEST_CASE("cluster arrivals start at zero and stay inside the window", "[svmodel]")
{
    for (std::uint64_t s = 0; s < 200; ++s)
    {
        RandomStream rng = RandomStream::substream(11, s);
        const auto T = sample_cluster_arrivals(row(), rng);
        REQUIRE(!T.empty());
        REQUIRE(T.front() == 0.0);
        for (std::size_t i = 1; i < T.size(); ++i)
        {
            REQUIRE(T[i] > T[i - 1]);
            REQUIRE(T[i] < kDefaultWindowNs);
        }
    }
}

TEST_CASE("arrival samplers respect the grid capacity", "[svmodel]")
{
    SVParams dense = row();
    dense.varsigma = 1e6;
    SynthesisOptions opts;
    opts.window_ns = 1.0;
    opts.sample_spacing_ns = 0.1;
    CHECK(opts.capacity() == 11);

    RandomStream rng(3);
    const auto tau = sample_mpc_arrivals(dense, rng, 1.0, opts);
    CHECK(tau.size() == 11);
    CHECK_THROWS_AS(sample_mpc_arrivals(dense, rng, 0.0, opts), std::invalid_argument);
}

TEST_CASE("mean MPC power", "[svmodel]")
{
    SVParams p = row();
    p.omega00 = 2.0;
    CHECK(mpc_mean_power(p, 0.0, 0.0) == 2.0);
    CHECK(mpc_mean_power(p, 10.0, 0.5) == Approx(2.0 * std::exp(-10.0 * 0.23) * std::exp(-0.5 * 8.7)));

    // Time-constant reading divides instead
    CHECK(mpc_mean_power(p, 10.0, 0.5, true) == Approx(2.0 * std::exp(-10.0 / 0.23) * std::exp(-0.5 / 8.7)));
    p.gamma = 0.0;
    CHECK(mpc_mean_power(p, 0.0, 0.0, true) == 2.0);
    CHECK(mpc_mean_power(p, 0.0, 1.0, true) == 0.0);
    CHECK_THROWS_AS(mpc_mean_power(p, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("cluster layout keeps MPCs before the next cluster", "[svmodel]")
{
    for (std::uint64_t s = 0; s < 100; ++s)
    {
        RandomStream rng = RandomStream::substream(5, s);
        const auto layout = draw_cluster_layout(row(), rng);
        for (std::size_t l = 0; l < layout.size(); ++l)
        {
            const double stop = l + 1 < layout.size() ? layout[l + 1].arrival_ns : kDefaultWindowNs;
            REQUIRE(layout[l].mpc_delays_ns.front() == 0.0);
            REQUIRE(layout[l].arrival_ns + layout[l].mpc_delays_ns.back() < stop);
        }
    }
}

TEST_CASE("deterministic amplitudes equal the root mean power", "[svmodel]")
{
    SynthesisOptions opts;
    opts.amplitude = AmplitudeModel::Deterministic;
    RandomStream a(77), b(77);
    const Cir cir = synthesize_cir(row(), a, opts);
    const auto layout = draw_cluster_layout(row(), b, opts);

    std::size_t k = 0;
    for (const auto &c : layout)
        for (double tau : c.mpc_delays_ns)
        {
            REQUIRE(k < cir.taps.size());
            CHECK(cir.taps[k].delay_ns == c.arrival_ns + tau);
            CHECK(cir.taps[k].amplitude == std::complex<double>(std::sqrt(mpc_mean_power(row(), c.arrival_ns, tau)), 0.0));
            ++k;
        }
    CHECK(k == cir.taps.size());
    CHECK(cir.taps.front().amplitude.real() == 1.0);
}

TEST_CASE("ensembles do not depend on the worker count", "[svmodel]")
{
    const auto one = synthesize_ensemble(row(), 64, 2026, {}, 1);
    const auto four = synthesize_ensemble(row(), 64, 2026, {}, 4);
    CHECK(one == four);
    for (std::size_t i = 0; i < one.size(); ++i)
    {
        REQUIRE(one[i].meta);
        CHECK(one[i].meta->scan_index == i);
        CHECK(one[i].meta->seed == 2026);
        CHECK_NOTHROW(one[i].validate());
    }

    // Scan i is reproducible on its own
    RandomStream rng = RandomStream::substream(2026, 17);
    Cir alone = synthesize_cir(row(), rng);
    alone.meta = one[17].meta;
    CHECK(alone == one[17]);

    CHECK(synthesize_ensemble(row(), 8, 2027) != synthesize_ensemble(row(), 8, 2026));
    CHECK_THROWS_AS(synthesize_ensemble(row(), 0, 1), std::invalid_argument);
}

TEST_CASE("parallel_for visits every index once and rethrows", "[svmodel]")
{
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
    for (const auto &h : hits)
        REQUIRE(h.load() == 1);

    CHECK_THROWS_AS(parallel_for(10, 3,
                                 [](std::size_t i)
                                 {
                                     if (i == 7)
                                         throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}

TEST_CASE("invalid inputs are rejected", "[svmodel]")
{
    SVParams p = row();
    p.chi = 0.0;
    RandomStream rng(1);
    CHECK_THROWS_AS(sample_cluster_arrivals(p, rng), std::invalid_argument);

    SynthesisOptions opts;
    opts.sample_spacing_ns = 0.0;
    CHECK_THROWS_AS(synthesize_cir(row(), rng, opts), std::invalid_argument);

    Cir bad;
    bad.taps = {{1.0, {1.0, 0.0}}, {1.0, {1.0, 0.0}}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.taps = {{101.0, {1.0, 0.0}}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
