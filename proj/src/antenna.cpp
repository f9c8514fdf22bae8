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

#include "uavsv/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uavsv
{
    void AntennaModel::validate() const
    {
        if (!(gain_exponent > 0.0) || !std::isfinite(gain_exponent))
            throw std::invalid_argument("Antenna gain exponent must be positive.");
        if (!(max_gain > 0.0) || !std::isfinite(max_gain))
            throw std::invalid_argument("Antenna boresight gain must be positive.");
    }

    double los_gain(const AntennaModel &model, double theta)
    {
        // sin(pi) evaluates to ~1e-16, clamp keeps the result inside [0, max_gain]
        const double s = std::clamp(std::abs(std::sin(theta)), 0.0, 1.0);
        const double g = (model.gain_exponent == 1.0) ? s : std::pow(s, model.gain_exponent);
        return model.max_gain * g;
    }

    double grc_gain(const AntennaModel &model, double omega, double omega_prime)
    {
        return std::sqrt(los_gain(model, omega) * los_gain(model, omega_prime));
    }

    double grc_gain(double omega, double omega_prime)
    {
        return grc_gain(AntennaModel{}, omega, omega_prime);
    }

    std::string_view to_string(Orientation o)
    {
        return o == Orientation::VV ? "VV" : "VH";
    }

    Orientation parse_orientation(std::string_view s)
    {
        if (s == "VV" || s == "vv")
            return Orientation::VV;
        if (s == "VH" || s == "vh")
            return Orientation::VH;
        throw std::invalid_argument("Unknown antenna orientation '" + std::string(s) + "' (expected VV or VH).");
    }

    double mismatch_penalty_db(const PolarizationState &state)
    {
        if (state.orientation == Orientation::VV)
            return 0.0;
        if (!state.c_pol_db)
            throw std::invalid_argument("VH orientation requires a polarization mismatch ratio c_pol.");
        if (!std::isfinite(*state.c_pol_db) || *state.c_pol_db < 0.0)
            throw std::invalid_argument("Polarization mismatch ratio must be a finite, non-negative dB value.");
        return *state.c_pol_db;
    }
}
