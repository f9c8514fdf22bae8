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

#include "uavsv/pathloss.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uavsv
{
    void RfConfig::validate() const
    {
        if (!(center_frequency_hz > 0.0) || !std::isfinite(center_frequency_hz))
            throw std::invalid_argument("Center frequency must be positive.");
        if (!(reference_distance_m > 0.0) || !std::isfinite(reference_distance_m))
            throw std::invalid_argument("Reference distance must be positive.");
        if (!(epsilon_r > 1.0) || !std::isfinite(epsilon_r))
            throw std::invalid_argument("Relative permittivity must exceed 1.");
        if (!(g_r_circular > 0.0) || g_r_circular > 1.0)
            throw std::invalid_argument("Mean circular RX gain must be in (0, 1].");
        if (!(dynamic_range_db >= 0.0) || !std::isfinite(dynamic_range_db))
            throw std::invalid_argument("Dynamic range must be a non-negative dB value.");
    }

    double fspl_ref_db(const RfConfig &cfg)
    {
        cfg.validate();
        return 20.0 * std::log10(4.0 * std::numbers::pi * cfg.reference_distance_m / cfg.wavelength_m());
    }

    double fresnel_gamma_v(double psi, double epsilon_r)
    {
        if (!(psi > 0.0) || psi > std::numbers::pi / 2.0 + 1e-12)
            throw std::invalid_argument("Grazing angle must be in (0, pi/2].");
        if (!(epsilon_r > 1.0))
            throw std::invalid_argument("Relative permittivity must exceed 1.");

        const double s = std::sin(psi);
        const double c = std::cos(psi);
        const double root = std::sqrt(epsilon_r - c * c);
        return std::abs((epsilon_r * s - root) / (epsilon_r * s + root));
    }

    PathLossResult combine_paths(const RfConfig &cfg, std::string model, PathLossComponents terms,
                                 std::optional<double> gamma_v)
    {
        if (terms.los < 0.0 || terms.grc < 0.0)
            throw std::invalid_argument("Path power terms cannot be negative.");

        PathLossResult out;
        out.model = std::move(model);
        out.fspl_ref_db = fspl_ref_db(cfg);
        out.components = terms;
        out.gamma_v = gamma_v;

        const double received = terms.los + terms.grc;
        if (received > 0.0)
            out.geometry_term_db = -10.0 * std::log10(received);
        else
        {
            out.geometry_term_db = std::numeric_limits<double>::infinity();
            out.antenna_null = true;
        }
        out.total_db = out.fspl_ref_db + out.geometry_term_db + out.penalty_db;
        return out;
    }

    namespace
    {
        // Per-antenna elevation gain as composed by the path-loss equations. With harmonize_gains
        // the sine pattern is treated as an amplitude pattern and squared.
        double antenna_factor(const AntennaModel &model, const RfConfig &cfg, double angle)
        {
            const double g = los_gain(model, angle);
            return cfg.harmonize_gains ? g * g : g;
        }

        double resolve_gamma(const TwoRayLayout &layout, const RfConfig &cfg, std::optional<double> gamma_override)
        {
            if (gamma_override)
            {
                if (*gamma_override < 0.0 || *gamma_override > 1.0)
                    throw std::invalid_argument("Reflection coefficient magnitude must be in [0, 1].");
                return *gamma_override;
            }
            return fresnel_gamma_v(layout.angles.psi, cfg.epsilon_r);
        }

        void check_rx1(const LinkGeometry &geom)
        {
            elevation_angle(geom); // validates h > 0, x >= 0
        }
    }

    PathLossResult pl_hover_rx1_vv(const LinkGeometry &geom, const AntennaModel &model, const RfConfig &cfg)
    {
        model.validate();
        cfg.validate();
        check_rx1(geom);

        const double theta = elevation_angle(geom);
        const double d0_sq = geom.x_m * geom.x_m + geom.h_m * geom.h_m;
        const double g = antenna_factor(model, cfg, theta);

        // TX and RX both see the LOS ray at theta
        return combine_paths(cfg, "hover_rx1_vv", {g * g / d0_sq, 0.0});
    }

    PathLossResult pl_hover_rx2_vv(const LinkGeometry &geom, const AntennaModel &model, const RfConfig &cfg,
                                   std::optional<double> gamma_override)
    {
        model.validate();
        cfg.validate();

        const TwoRayLayout layout = two_ray_geometry(geom);
        const auto &a = layout.angles;
        const auto &d = layout.distances;
        const double gamma = resolve_gamma(layout, cfg, gamma_override);

        const double g_los = antenna_factor(model, cfg, a.theta_prime);
        const double los = g_los * g_los / (d.d0_prime * d.d0_prime);
        const double grc = antenna_factor(model, cfg, a.omega) * antenna_factor(model, cfg, a.omega_prime) *
                           gamma * gamma / (d.d1 * d.d1);
        return combine_paths(cfg, "hover_rx2_vv", {los, grc}, gamma);
    }

    PathLossResult pl_move_rx1_vv(const LinkGeometry &geom, const AntennaModel &model, const RfConfig &cfg)
    {
        model.validate();
        cfg.validate();
        check_rx1(geom);

        const double theta = elevation_angle(geom);
        const double d0_sq = geom.x_m * geom.x_m + geom.h_m * geom.h_m;

        // First power of the TX pattern, RX replaced by its mean gain
        const double los = antenna_factor(model, cfg, theta) * cfg.g_r_circular / d0_sq;
        return combine_paths(cfg, "move_rx1_vv", {los, 0.0});
    }

    PathLossResult pl_move_rx2_vv(const LinkGeometry &geom, const AntennaModel &model, const RfConfig &cfg,
                                  std::optional<double> gamma_override)
    {
        model.validate();
        cfg.validate();

        const TwoRayLayout layout = two_ray_geometry(geom);
        const auto &a = layout.angles;
        const auto &d = layout.distances;
        const double gamma = resolve_gamma(layout, cfg, gamma_override);
        const double g_rx = cfg.g_r_circular;

        // The ground-reflected term carries only the TX-side factor, sin(omega_prime)
        const double los = antenna_factor(model, cfg, a.theta_prime) * g_rx / (d.d0_prime * d.d0_prime);
        const double grc = antenna_factor(model, cfg, a.omega_prime) * g_rx * gamma * gamma / (d.d1 * d.d1);
        return combine_paths(cfg, "move_rx2_vv", {los, grc}, gamma);
    }

    PathLossResult pl_vh(const PathLossResult &base, const PolarizationState &state)
    {
        if (base.penalty_db != 0.0)
            throw std::invalid_argument("Polarization penalty is applied to a co-polarized (VV) result only.");

        PathLossResult out = base;
        out.penalty_db = mismatch_penalty_db(state);
        out.total_db = out.fspl_ref_db + out.geometry_term_db + out.penalty_db;
        if (state.orientation == Orientation::VH && out.model.size() > 2 &&
            out.model.compare(out.model.size() - 2, 2, "vv") == 0)
            out.model.replace(out.model.size() - 2, 2, "vh");
        return out;
    }

    PathLossResult pl_foliage(const RfConfig &cfg)
    {
        cfg.validate();

        PathLossResult out;
        out.model = "foliage_clamp";
        out.fspl_ref_db = fspl_ref_db(cfg);
        out.geometry_term_db = cfg.dynamic_range_db;
        out.total_db = out.fspl_ref_db + out.geometry_term_db;
        out.clamped = true;
        return out;
    }
}
