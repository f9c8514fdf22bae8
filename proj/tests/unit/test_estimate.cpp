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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace uavsv;
using Catch::Approx;

namespace
{
    Cir from_db(std::initializer_list<std::pair<double, double>> delay_db)
    {
        Cir c;
        for (const auto &[d, db] : delay_db)
            c.taps.push_back({d, {std::pow(10.0, db / 20.0), 0.0}});
        return c;
    }

    // 10 dB/ns in natural-log power units
    const double kTenDbPerNs = std::numbers::ln10;
}

TEST_CASE("censored exponential rate", "[estimate]")
{
    const std::vector<double> gaps{10.0, 20.0, 30.0};
    CHECK(exponential_rate_mle(gaps) == Approx(0.05));
    CHECK(exponential_rate_mle(gaps, 40.0) == Approx(0.03));
    CHECK(std::isnan(exponential_rate_mle({})));

    const std::vector<double> negative{-1.0};
    CHECK_THROWS_AS(exponential_rate_mle(negative), std::invalid_argument);
    CHECK_THROWS_AS(exponential_rate_mle(gaps, -1.0), std::invalid_argument);
}

TEST_CASE("plain tap segmentation", "[estimate]")
{
    const Cir c = from_db({{0, 0}, {1, -10}, {2, -20}, {10, -5}, {11, -15}});
    const auto cl = segment_taps(c, ClusterRule{});
    REQUIRE(cl.size() == 2);
    CHECK(cl[0].taps == std::vector<std::size_t>{0, 1, 2});
    CHECK(cl[1].taps == std::vector<std::size_t>{3, 4});

    // The same rise 1.5 ns after the lead is absorbed
    const Cir early = from_db({{0, 0}, {1, -10}, {1.5, -5}, {2, -15}});
    CHECK(segment_taps(early, ClusterRule{}).size() == 1);
}

TEST_CASE("model segmentation follows both decay lines", "[estimate]")
{
    SegmentationModel m;
    m.gamma = kTenDbPerNs;
    m.lead_line = {0.0, -0.5};

    // Tap at 10 ns sits 95 dB above the intra-cluster prediction and 0 dB off the lead line
    const Cir c = from_db({{0, 0}, {1, -10}, {10, -5}, {11, -15}});
    const auto cl = segment_taps(c, ClusterRule{}, m);
    REQUIRE(cl.size() == 2);
    CHECK_FALSE(cl[0].composite);

    // A second lead inside the dead time re-anchors the prediction and marks the cluster
    const Cir comp = from_db({{0, 0}, {1, -10}, {2, -1}, {3, -11}, {20, -10}});
    const auto cc = segment_taps(comp, ClusterRule{}, m);
    REQUIRE(cc.size() == 2);
    CHECK(cc[0].composite);
    CHECK(cc[0].taps == std::vector<std::size_t>{0, 1, 2, 3});

    // A lead within min_duration of the window end cannot be separated
    const Cir tail = from_db({{0, 0}, {1, -10}, {98.5, -49}});
    const auto ct = segment_taps(tail, ClusterRule{}, m);
    REQUIRE(ct.size() == 1);
    CHECK(ct[0].composite);
}

TEST_CASE("estimates from a hand-made single-cluster ensemble", "[estimate]")
{
    std::vector<Cir> scans(12, from_db({{0, 0}, {1, -10}, {2, -20}}));
    const SvEstimate e = estimate_sv_params(scans);
    CHECK(e.n_scans == 12);
    CHECK(e.n_clusters == 12);
    CHECK(e.params.n_c_mean == 1.0);
    CHECK_FALSE(e.chi_defined);
    CHECK(std::isnan(e.params.chi));
    CHECK(e.params.varsigma == Approx(24.0 / 1200.0));
    CHECK(e.params.gamma == Approx(kTenDbPerNs));
    CHECK(std::isnan(e.params.eta));
    CHECK(e.params.omega00 == Approx(1.0));
    CHECK_FALSE(e.few_scans);
    CHECK(e.warnings.size() == 2);
}

TEST_CASE("few scans raise a warning", "[estimate]")
{
    const SVParams p = catalog_lookup({Scenario::HoverOpen, Receiver::RX1, Orientation::VV, 30});
    const auto scans = synthesize_ensemble(p, 5, 3);
    const SvEstimate e = estimate_sv_params(scans);
    CHECK(e.few_scans);
    REQUIRE_FALSE(e.warnings.empty());
    CHECK(e.warnings.front().find("recommended") != std::string::npos);
    CHECK_THROWS_AS(estimate_sv_params(std::span<const Cir>{}), std::invalid_argument);
}

TEST_CASE("synthesis and estimation agree", "[estimate]")
{
    const SVParams truth = catalog_lookup({Scenario::HoverOpen, Receiver::RX1, Orientation::VV, 15});
    const auto scans = synthesize_ensemble(truth, 3000, 99, {}, 2);
    const SvEstimate e = estimate_sv_params(scans);
    CHECK(e.params.chi == Approx(truth.chi).epsilon(0.15));
    CHECK(e.params.varsigma == Approx(truth.varsigma).epsilon(0.15));
    CHECK(e.params.eta == Approx(truth.eta).epsilon(0.15));
    CHECK(e.params.gamma == Approx(truth.gamma).epsilon(0.15));
    CHECK(e.params.omega00 == Approx(1.0).epsilon(0.1));
    CHECK(e.warnings.empty());
}
