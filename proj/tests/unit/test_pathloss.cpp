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

#include "uavsv/catalog.hpp"
#include "uavsv/pathloss.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace uavsv;
using Catch::Approx;

namespace
{
    const AntennaModel kDipole;
    const RfConfig kRf;

    LinkGeometry rx1(double x, double h) { return {x, h, kRx1HeightM}; }
    LinkGeometry rx2(double x, double h) { return {x, h, kRx2HeightM}; }
}

TEST_CASE("free-space reference term", "[pathloss]")
{
    // 20 log10(4 pi f / c) at 3.95 GHz and 1 m
    CHECK(fspl_ref_db(kRf) == Approx(44.3797).margin(1e-4));

    RfConfig far = kRf;
    far.reference_distance_m = 10.0;
    CHECK(fspl_ref_db(far) - fspl_ref_db(kRf) == Approx(20.0));

    RfConfig bad = kRf;
    bad.center_frequency_hz = 0.0;
    CHECK_THROWS_AS(fspl_ref_db(bad), std::invalid_argument);
}

TEST_CASE("Fresnel coefficient, vertical polarization", "[pathloss]")
{
    const double root = std::sqrt(35.0);
    CHECK(fresnel_gamma_v(std::numbers::pi / 2, 35.0) == Approx((root - 1.0) / (root + 1.0)));
    CHECK(fresnel_gamma_v(std::numbers::pi / 2, 35.0) == Approx(0.7108188).margin(1e-7));

    // Brewster angle: tan(psi) = 1 / sqrt(eps), so sin(psi) = 1/6 for eps = 35
    CHECK(fresnel_gamma_v(std::asin(1.0 / 6.0), 35.0) == Approx(0.0).margin(1e-12));

    // Grazing incidence tends to total reflection
    CHECK(fresnel_gamma_v(1e-6, 35.0) == Approx(1.0).margin(1e-4));

    CHECK_THROWS_AS(fresnel_gamma_v(0.0, 35.0), std::invalid_argument);
    CHECK_THROWS_AS(fresnel_gamma_v(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("Fresnel coefficient tracks the measured reflection table", "[pathloss]")
{
    for (int x : {15, 30})
        for (int h : {10, 20, 30})
        {
            const double psi = two_ray_geometry(rx2(x, h)).angles.psi;
            CHECK(std::abs(fresnel_gamma_v(psi, kRf.epsilon_r) - *reference_gamma_lookup(x, h)) <= 0.04);
        }
}

TEST_CASE("hovering RX1 path loss", "[pathloss]")
{
    CHECK(pl_hover_rx1_vv(rx1(15, 10), kDipole, kRf).total_db == Approx(71.0956).margin(1e-4));
    CHECK(pl_hover_rx1_vv(rx1(30, 10), kDipole, kRf).total_db == Approx(74.8373).margin(1e-4));
    CHECK(pl_hover_rx1_vv(rx1(15, 30), kDipole, kRf).total_db == Approx(81.8810).margin(1e-4));
    CHECK(pl_hover_rx1_vv(rx1(30, 30), kDipole, kRf).total_db == Approx(79.9428).margin(1e-4));

    // The RX height plays no part in the ground-RX formula
    CHECK(pl_hover_rx1_vv({15, 10, 0.0}, kDipole, kRf).total_db == pl_hover_rx1_vv(rx1(15, 10), kDipole, kRf).total_db);

    const auto r = pl_hover_rx1_vv(rx1(15, 10), kDipole, kRf);
    CHECK(r.model == "hover_rx1_vv");
    CHECK(r.components.grc == 0.0);
    CHECK_FALSE(r.gamma_v);
    CHECK(r.total_db == Approx(r.fspl_ref_db + r.geometry_term_db));
}

TEST_CASE("hovering RX1 directly overhead is an antenna null", "[pathloss]")
{
    const auto r = pl_hover_rx1_vv(rx1(0, 10), kDipole, kRf);
    CHECK(r.antenna_null);
    CHECK(std::isinf(r.total_db));
}

TEST_CASE("hovering RX2 adds the ground reflection", "[pathloss]")
{
    const auto g = rx2(15, 10);
    const auto l = two_ray_geometry(g);
    const double gamma = fresnel_gamma_v(l.angles.psi, 35.0);
    const double s_los = std::sin(l.angles.theta_prime);
    const double s_grc = std::sin(l.angles.omega);
    const double los = s_los * s_los / (l.distances.d0_prime * l.distances.d0_prime);
    const double grc = s_grc * s_grc * gamma * gamma / (l.distances.d1 * l.distances.d1);

    const auto r = pl_hover_rx2_vv(g, kDipole, kRf);
    CHECK(r.components.los == Approx(los));
    CHECK(r.components.grc == Approx(grc));
    CHECK(*r.gamma_v == Approx(gamma));
    CHECK(r.total_db == Approx(fspl_ref_db(kRf) - 10.0 * std::log10(los + grc)));

    const auto table = pl_hover_rx2_vv(g, kDipole, kRf, 0.59);
    CHECK(*table.gamma_v == 0.59);
    CHECK_THROWS_AS(pl_hover_rx2_vv(g, kDipole, kRf, 1.5), std::invalid_argument);
}

TEST_CASE("moving UAV uses the mean circular RX gain", "[pathloss]")
{
    CHECK(pl_move_rx1_vv(rx1(15, 10), kDipole, kRf).total_db == Approx(73.3074).margin(1e-4));

    RfConfig full = kRf;
    full.g_r_circular = 1.0;
    CHECK(pl_move_rx1_vv(rx1(15, 10), kDipole, kRf).total_db -
              pl_move_rx1_vv(rx1(15, 10), kDipole, full).total_db ==
          Approx(10.0 * std::log10(2.0)));

    const auto l = two_ray_geometry(rx2(30, 20));
    const double gamma = fresnel_gamma_v(l.angles.psi, 35.0);
    const double los = std::sin(l.angles.theta_prime) * 0.5 / (l.distances.d0_prime * l.distances.d0_prime);
    const double grc = std::sin(l.angles.omega_prime) * 0.5 * gamma * gamma / (l.distances.d1 * l.distances.d1);
    CHECK(pl_move_rx2_vv(rx2(30, 20), kDipole, kRf).total_db ==
          Approx(fspl_ref_db(kRf) - 10.0 * std::log10(los + grc)));
}

TEST_CASE("harmonized gains square each antenna factor", "[pathloss]")
{
    RfConfig h = kRf;
    h.harmonize_gains = true;
    const double theta = std::atan(15.0 / 10.0);
    const double expected = fspl_ref_db(kRf) - 10.0 * std::log10(std::pow(std::sin(theta), 4) / 325.0);
    CHECK(pl_hover_rx1_vv(rx1(15, 10), kDipole, h).total_db == Approx(expected));
}

TEST_CASE("cross-polarized penalty and foliage clamp", "[pathloss]")
{
    const auto vv = pl_hover_rx1_vv(rx1(15, 10), kDipole, kRf);
    const auto vh = pl_vh(vv, {Orientation::VH, 12.9});
    CHECK(vh.total_db == Approx(vv.total_db + 12.9));
    CHECK(vh.penalty_db == 12.9);
    CHECK(vh.model == "hover_rx1_vh");
    CHECK_THROWS_AS(pl_vh(vh, {Orientation::VH, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(pl_vh(vv, {Orientation::VH, std::nullopt}), std::invalid_argument);

    const auto f = pl_foliage(kRf);
    CHECK(f.clamped);
    CHECK(f.total_db == Approx(fspl_ref_db(kRf) + 48.0));
}
