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

#include <cmath>
#include <stdexcept>

namespace uavsv
{
    double elevation_angle(const LinkGeometry &geom)
    {
        if (!std::isfinite(geom.x_m) || !std::isfinite(geom.h_m))
            throw std::invalid_argument("Link geometry must be finite.");
        if (geom.h_m <= 0.0)
            throw std::invalid_argument("UAV height must be positive.");
        if (geom.x_m < 0.0)
            throw std::invalid_argument("Horizontal distance cannot be negative.");

        return std::atan2(geom.x_m, geom.h_m);
    }

    TwoRayLayout two_ray_geometry(const LinkGeometry &geom)
    {
        if (!std::isfinite(geom.h_rx_m))
            throw std::invalid_argument("Link geometry must be finite.");
        if (geom.h_rx_m < 0.0)
            throw std::invalid_argument("RX height cannot be negative.");

        const double theta = elevation_angle(geom);
        if (geom.h_m <= geom.h_rx_m)
            throw std::invalid_argument("UAV height must exceed the RX height for the two-ray layout.");

        const double x = geom.x_m;
        const double dh = geom.h_m - geom.h_rx_m;
        const double sh = geom.h_m + geom.h_rx_m;

        TwoRayLayout out;
        out.angles.theta = theta;
        out.angles.theta_prime = std::atan2(x, dh);

        // atan2 yields pi/2 at x = 0 without a special case
        out.angles.psi = std::atan2(sh, x);
        out.angles.omega = std::atan2(x, sh);
        out.angles.omega_prime = out.angles.omega;

        out.distances.d0 = std::hypot(x, geom.h_m);
        out.distances.d0_prime = std::hypot(x, dh);
        out.distances.d1 = std::hypot(x, sh);
        return out;
    }
}
