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

#ifndef UAVSV_ANTENNA_HPP
#define UAVSV_ANTENNA_HPP

#include <optional>
#include <string_view>

namespace uavsv
{
    // Elevation-plane gain of a vertical planar dipole, max_gain * |sin(angle)|^gain_exponent.
    // The azimuth plane is treated as isotropic.
    struct AntennaModel
    {
        double gain_exponent = 1.0;
        double max_gain = 1.0;

        void validate() const; // throws std::invalid_argument
    };

    // Linear gain factor for a ray leaving the dipole at `theta` radians from its axis.
    double los_gain(const AntennaModel &model, double theta);

    // Combined TX/RX gain of the ground-reflected ray, sqrt(g(omega) * g(omega_prime)).
    double grc_gain(const AntennaModel &model, double omega, double omega_prime);
    double grc_gain(double omega, double omega_prime);

    enum class Orientation
    {
        VV, // TX and RX vertical (co-polarized)
        VH  // TX horizontal, RX vertical (cross-polarized)
    };

    std::string_view to_string(Orientation o);
    Orientation parse_orientation(std::string_view s); // throws std::invalid_argument

    // Aggregate polarization mismatch. Only the measured VH/VV loss ratio c_pol is modelled;
    // VV is the 0 dB reference.
    struct PolarizationState
    {
        Orientation orientation = Orientation::VV;
        std::optional<double> c_pol_db;
    };

    // 0 dB for VV, c_pol_db for VH. A VH state without c_pol_db throws std::invalid_argument.
    double mismatch_penalty_db(const PolarizationState &state);
}

#endif
