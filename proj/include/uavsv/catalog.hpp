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

#ifndef UAVSV_CATALOG_HPP
#define UAVSV_CATALOG_HPP

#include "uavsv/antenna.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uavsv
{
    enum class Scenario
    {
        HoverOpen,    // Hovering, unobstructed
        HoverFoliage, // Hovering, LOS partially blocked by a tree
        MovingOpen    // Circling the receivers at constant altitude, unobstructed
    };

    enum class Receiver
    {
        RX1, // 0.1 m above ground
        RX2  // 1.5 m above ground
    };

    inline constexpr double kRx1HeightM = 0.1;
    inline constexpr double kRx2HeightM = 1.5;

    std::string_view to_string(Scenario s);
    std::string_view to_string(Receiver r);
    Scenario parse_scenario(std::string_view s); // throws std::invalid_argument
    Receiver parse_receiver(std::string_view s); // throws std::invalid_argument
    double receiver_height_m(Receiver r);

    struct ScenarioKey
    {
        Scenario scenario = Scenario::HoverOpen;
        Receiver rx = Receiver::RX1;
        Orientation orientation = Orientation::VV;
        int x_m = 15; // 15 or 30

        void validate() const; // throws std::invalid_argument
        auto operator<=>(const ScenarioKey &) const = default;
    };

    std::string describe(const ScenarioKey &key); // "HoverOpen,RX1,VV,15"
    ScenarioKey parse_scenario_key(std::string_view descriptor);

    // Saleh-Valenzuela parameters. Rates in 1/ns; eta and gamma are decay rates in 1/ns unless
    // synthesis is told to read them as time constants.
    struct SVParams
    {
        double n_c_mean = 1.0; // Mean cluster count in the 100 ns window
        double chi = 0.01;     // Cluster arrival rate
        double varsigma = 0.1; // MPC arrival rate within a cluster
        double eta = 0.0;      // Cluster power decay
        double gamma = 0.0;    // MPC power decay
        double omega00 = 1.0;  // Mean power of the first path of the first cluster

        void validate() const; // throws std::invalid_argument
        bool operator==(const SVParams &) const = default;
    };

    struct SvCatalogRow
    {
        std::optional<ScenarioKey> key; // Empty for custom rows
        SVParams params;
        bool operator==(const SvCatalogRow &) const = default;
    };

    // Ground reflection coefficient and polarization mismatch per link geometry.
    struct LinkCatalogRow
    {
        Scenario scenario = Scenario::HoverOpen; // HoverOpen or MovingOpen
        Receiver rx = Receiver::RX1;
        int x_m = 15;
        int h_m = 10;
        std::optional<double> gamma_v; // Reference |Gamma| (RX2 only)
        double c_pol_db = 0.0;
        bool operator==(const LinkCatalogRow &) const = default;
    };

    std::span<const SvCatalogRow> sv_catalog();
    std::span<const LinkCatalogRow> link_catalog();

    // Built-in SV row for `key`. Throws std::invalid_argument for keys outside the catalog.
    SVParams catalog_lookup(const ScenarioKey &key);

    // c_pol for the given link, or nothing when no measurement exists.
    std::optional<double> c_pol_lookup(Scenario scenario, Receiver rx, double x_m, double h_m);

    // Reference |Gamma| for RX2 at (x, h), or nothing.
    std::optional<double> reference_gamma_lookup(double x_m, double h_m);

    // Versioned text forms of the catalogs. format(parse(s)) == s for files written by format().
    std::string format_sv_catalog(std::span<const SvCatalogRow> rows);
    std::vector<SvCatalogRow> parse_sv_catalog(std::string_view text); // throws ParseError
    std::string format_link_catalog(std::span<const LinkCatalogRow> rows);
    std::vector<LinkCatalogRow> parse_link_catalog(std::string_view text); // throws ParseError

    inline constexpr std::string_view kSvCatalogMagic = "# uavsv sv-catalog v1";
    inline constexpr std::string_view kLinkCatalogMagic = "# uavsv link-catalog v1";
}

#endif
