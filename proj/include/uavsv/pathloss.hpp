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

#ifndef UAVSV_PATHLOSS_HPP
#define UAVSV_PATHLOSS_HPP

#include "uavsv/antenna.hpp"
#include "uavsv/geometry.hpp"

#include <optional>
#include <string>

namespace uavsv
{
    inline constexpr double kSpeedOfLight = 299792458.0; // m/s

    struct RfConfig
    {
        double center_frequency_hz = 3.95e9;
        double reference_distance_m = 1.0;
        double epsilon_r = 35.0;       // Relative permittivity of the ground
        double g_r_circular = 0.5;     // Mean RX gain while the UAV circles the RX
        double dynamic_range_db = 48.0;
        bool harmonize_gains = false;  // Square every per-antenna elevation gain factor

        void validate() const; // throws std::invalid_argument
        double wavelength_m() const { return kSpeedOfLight / center_frequency_hz; }
    };

    // Received power of each resolved path relative to the reference-distance power
    // (gain / d^2 terms, linear).
    struct PathLossComponents
    {
        double los = 0.0;
        double grc = 0.0;
    };

    struct PathLossResult
    {
        std::string model;
        double total_db = 0.0;
        double fspl_ref_db = 0.0;
        double geometry_term_db = 0.0; // 10 log10 of the excess over the reference
        double penalty_db = 0.0;       // Polarization mismatch
        PathLossComponents components;
        std::optional<double> gamma_v; // |Gamma| used for the ground-reflected path
        bool clamped = false;          // Dynamic-range limited estimate, not a propagation prediction
        bool antenna_null = false;     // All received terms vanish, total_db = +inf
    };

    // Close-in free-space reference term, 20 log10(4 pi d_ref / lambda).
    double fspl_ref_db(const RfConfig &cfg);

    // |Gamma| of a lossless dielectric half-space for vertical polarization at grazing angle psi.
    double fresnel_gamma_v(double psi, double epsilon_r);

    // Assembles a result from path terms: total = fspl_ref - 10 log10(los + grc).
    PathLossResult combine_paths(const RfConfig &cfg, std::string model, PathLossComponents terms,
                                 std::optional<double> gamma_v = {});

    // Hovering UAV, RX on the ground, LOS only. Uses x and h; the RX height is neglected.
    PathLossResult pl_hover_rx1_vv(const LinkGeometry &geom, const AntennaModel &model, const RfConfig &cfg);

    // Hovering UAV, elevated RX, LOS plus ground reflection. |Gamma| comes from
    // fresnel_gamma_v unless gamma_override is given.
    PathLossResult pl_hover_rx2_vv(const LinkGeometry &geom, const AntennaModel &model, const RfConfig &cfg,
                                   std::optional<double> gamma_override = {});

    // UAV circling the RX. The RX gain is replaced by the mean value cfg.g_r_circular.
    PathLossResult pl_move_rx1_vv(const LinkGeometry &geom, const AntennaModel &model, const RfConfig &cfg);
    PathLossResult pl_move_rx2_vv(const LinkGeometry &geom, const AntennaModel &model, const RfConfig &cfg,
                                  std::optional<double> gamma_override = {});

    // Adds the VH/VV polarization mismatch ratio to a co-polarized result.
    PathLossResult pl_vh(const PathLossResult &base, const PolarizationState &state);

    // Foliage-obstructed link: the sounder saturates at its dynamic range, so the result is the
    // constant fspl_ref + dynamic_range_db, flagged as clamped.
    PathLossResult pl_foliage(const RfConfig &cfg);
}

#endif
