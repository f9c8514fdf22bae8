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

#ifndef UAVSV_GEOMETRY_HPP
#define UAVSV_GEOMETRY_HPP

namespace uavsv
{
    // Air-to-ground link layout. All lengths in meters, flat ground at z = 0.
    struct LinkGeometry
    {
        double x_m = 0.0;    // Horizontal TX-RX distance
        double h_m = 0.0;    // UAV (TX) height above ground
        double h_rx_m = 0.0; // RX antenna height above ground
    };

    // Angles in radians. theta/theta_prime/omega/omega_prime are measured from the vertical
    // (dipole axis), psi is the grazing angle of the ground-reflected ray.
    struct LinkAngles
    {
        double theta = 0.0;       // LOS angle at the TX, RX at ground level
        double theta_prime = 0.0; // LOS angle for the elevated RX
        double psi = 0.0;         // Grazing angle at the specular point
        double omega = 0.0;       // Ground-reflected ray angle at the RX
        double omega_prime = 0.0; // Ground-reflected ray angle at the TX
    };

    struct LinkDistances
    {
        double d0 = 0.0;       // TX to ground-level RX
        double d0_prime = 0.0; // TX to elevated RX
        double d1 = 0.0;       // Ground-reflected path length (image method)
    };

    struct TwoRayLayout
    {
        LinkAngles angles;
        LinkDistances distances;
    };

    // Elevation angle from vertical, theta = atan(x / h). Throws std::invalid_argument for h <= 0 or x < 0.
    double elevation_angle(const LinkGeometry &geom);

    // Specular two-ray layout over flat ground. Requires h > h_rx >= 0 and x >= 0.
    // For x = 0 the reflected ray is vertical: psi = pi/2, omega = omega_prime = 0.
    TwoRayLayout two_ray_geometry(const LinkGeometry &geom);

    constexpr double deg_to_rad(double deg) { return deg * 0.017453292519943295; }
    constexpr double rad_to_deg(double rad) { return rad * 57.295779513082323; }
}

#endif
