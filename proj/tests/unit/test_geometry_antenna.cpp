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

#include "uavsv/geometry.hpp"
#include "uavsv/antenna.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace uavsv;
using Catch::Approx;

TEST_CASE("elevation angle from the vertical", "[geometry]")
{
    CHECK(elevation_angle({15.0, 15.0, 0.0}) == Approx(std::numbers::pi / 4));
    CHECK(elevation_angle({0.0, 10.0, 0.0}) == 0.0);
    CHECK(elevation_angle({30.0, 10.0, 0.0}) == Approx(std::atan(3.0)));

    CHECK_THROWS_AS(elevation_angle({15.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(elevation_angle({-1.0, 10.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(elevation_angle({NAN, 10.0, 0.0}), std::invalid_argument);
}

TEST_CASE("two-ray layout by the image method", "[geometry]")
{
    const auto l = two_ray_geometry({15.0, 10.0, 1.5});

    // Image RX sits at -h_rx, so the reflected path spans h + h_rx vertically
    CHECK(l.distances.d1 == Approx(std::sqrt(15.0 * 15.0 + 11.5 * 11.5)));
    CHECK(l.distances.d0_prime == Approx(std::sqrt(15.0 * 15.0 + 8.5 * 8.5)));
    CHECK(l.distances.d0 == Approx(std::sqrt(15.0 * 15.0 + 10.0 * 10.0)));
    CHECK(std::tan(l.angles.psi) == Approx(11.5 / 15.0));
    CHECK(std::tan(l.angles.theta_prime) == Approx(15.0 / 8.5));
    CHECK(l.angles.omega + l.angles.psi == Approx(std::numbers::pi / 2));
    CHECK(l.angles.omega_prime == l.angles.omega);
    CHECK(l.distances.d1 > l.distances.d0_prime);
}

TEST_CASE("two-ray layout edge cases", "[geometry]")
{
    const auto overhead = two_ray_geometry({0.0, 10.0, 1.5});
    CHECK(overhead.angles.psi == Approx(std::numbers::pi / 2));
    CHECK(overhead.angles.omega == 0.0);
    CHECK(overhead.distances.d1 == Approx(11.5));

    CHECK_THROWS_AS(two_ray_geometry({15.0, 1.5, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS(two_ray_geometry({15.0, 10.0, -0.1}), std::invalid_argument);
}

TEST_CASE("degree conversions", "[geometry]")
{
    CHECK(deg_to_rad(180.0) == Approx(std::numbers::pi));
    CHECK(rad_to_deg(std::numbers::pi / 2) == Approx(90.0));
}

TEST_CASE("dipole elevation gain", "[antenna]")
{
    const AntennaModel dipole;
    CHECK(los_gain(dipole, std::numbers::pi / 2) == Approx(1.0));
    CHECK(los_gain(dipole, std::numbers::pi / 6) == Approx(0.5));
    CHECK(los_gain(dipole, 0.0) == 0.0);
    CHECK(los_gain(dipole, std::numbers::pi) >= 0.0);
    CHECK(los_gain(dipole, std::numbers::pi) < 1e-15);

    const AntennaModel squared{2.0, 1.64};
    CHECK(los_gain(squared, std::numbers::pi / 6) == Approx(1.64 * 0.25));

    CHECK(grc_gain(std::numbers::pi / 6, std::numbers::pi / 2) == Approx(std::sqrt(0.5)));

    CHECK_THROWS_AS((AntennaModel{0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((AntennaModel{1.0, -1.0}.validate()), std::invalid_argument);
}

TEST_CASE("orientation parsing and mismatch penalty", "[antenna]")
{
    CHECK(parse_orientation("VV") == Orientation::VV);
    CHECK(parse_orientation("vh") == Orientation::VH);
    CHECK(to_string(Orientation::VH) == "VH");
    CHECK_THROWS_AS(parse_orientation("HH"), std::invalid_argument);

    CHECK(mismatch_penalty_db({Orientation::VV, std::nullopt}) == 0.0);
    CHECK(mismatch_penalty_db({Orientation::VV, 12.9}) == 0.0);
    CHECK(mismatch_penalty_db({Orientation::VH, 12.9}) == 12.9);
    CHECK_THROWS_AS(mismatch_penalty_db({Orientation::VH, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(mismatch_penalty_db({Orientation::VH, -1.0}), std::invalid_argument);
}
