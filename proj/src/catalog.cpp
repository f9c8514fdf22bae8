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
#include "uavsv/text.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace uavsv
{
    std::string_view to_string(Scenario s)
    {
        switch (s)
        {
        case Scenario::HoverOpen:
            return "HoverOpen";
        case Scenario::HoverFoliage:
            return "HoverFoliage";
        case Scenario::MovingOpen:
            return "MovingOpen";
        }
        return "?";
    }

    std::string_view to_string(Receiver r)
    {
        return r == Receiver::RX1 ? "RX1" : "RX2";
    }

    Scenario parse_scenario(std::string_view s)
    {
        if (s == "HoverOpen" || s == "hover-open" || s == "hover")
            return Scenario::HoverOpen;
        if (s == "HoverFoliage" || s == "hover-foliage" || s == "foliage")
            return Scenario::HoverFoliage;
        if (s == "MovingOpen" || s == "moving-open" || s == "moving")
            return Scenario::MovingOpen;
        throw std::invalid_argument("Unknown scenario '" + std::string(s) + "'.");
    }

    Receiver parse_receiver(std::string_view s)
    {
        if (s == "RX1" || s == "rx1" || s == "1")
            return Receiver::RX1;
        if (s == "RX2" || s == "rx2" || s == "2")
            return Receiver::RX2;
        throw std::invalid_argument("Unknown receiver '" + std::string(s) + "'.");
    }

    double receiver_height_m(Receiver r)
    {
        return r == Receiver::RX1 ? kRx1HeightM : kRx2HeightM;
    }

    void ScenarioKey::validate() const
    {
        if (x_m != 15 && x_m != 30)
            throw std::invalid_argument("Horizontal distance must be 15 or 30 m, got " + std::to_string(x_m) + ".");
    }

    std::string describe(const ScenarioKey &key)
    {
        return std::string(to_string(key.scenario)) + "," + std::string(to_string(key.rx)) + "," +
               std::string(to_string(key.orientation)) + "," + std::to_string(key.x_m);
    }

    ScenarioKey parse_scenario_key(std::string_view descriptor)
    {
        const auto f = text::split(descriptor, ',');
        if (f.size() != 4)
            throw std::invalid_argument("Scenario descriptor needs 4 fields: scenario,rx,orientation,x_m.");
        ScenarioKey key;
        key.scenario = parse_scenario(text::trim(f[0]));
        key.rx = parse_receiver(text::trim(f[1]));
        key.orientation = parse_orientation(text::trim(f[2]));
        key.x_m = static_cast<int>(text::parse_int(f[3]));
        key.validate();
        return key;
    }

    void SVParams::validate() const
    {
        auto finite_pos = [](double v) { return std::isfinite(v) && v > 0.0; };
        auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
        if (!finite_pos(n_c_mean))
            throw std::invalid_argument("n_c_mean must be positive.");
        if (!finite_pos(chi))
            throw std::invalid_argument("chi must be positive.");
        if (!finite_pos(varsigma))
            throw std::invalid_argument("varsigma must be positive.");
        if (!finite_nonneg(eta))
            throw std::invalid_argument("eta cannot be negative.");
        if (!finite_nonneg(gamma))
            throw std::invalid_argument("gamma cannot be negative.");
        if (!finite_pos(omega00))
            throw std::invalid_argument("omega00 must be positive.");
    }

    namespace
    {
        // One table block: columns RX1VV15, RX1VV30, RX2VV15, RX2VV30, RX1VH15, RX1VH30, RX2VH15, RX2VH30.
        struct TableBlock
        {
            Scenario scenario;
            std::array<double, 8> n_c, chi, eta, varsigma, gamma;
        };

        constexpr std::array<TableBlock, 3> kTables = {{
            {Scenario::HoverOpen,
             {3.33, 4, 2.66, 2, 1.66, 2.66, 1.66, 1.33},
             {0.033, 0.04, 0.027, 0.02, 0.017, 0.027, 0.017, 0.013},
             {0.23, 0.186, 0.24, 0.16, 0.215, 0.16, 0.177, 0.171},
             {0.1, 0.06, 0.11, 0.06, 0.25, 0.15, 0.26, 0.2},
             {8.7, 8.66, 5.5, 4.3, 2.7, 5.92, 2.8, 1.88}},
            {Scenario::HoverFoliage,
             {2, 2, 2, 1.66, 2, 1.33, 1.66, 1.33},
             {0.02, 0.02, 0.02, 0.017, 0.02, 0.013, 0.017, 0.013},
             {0.212, 0.21, 0.24, 0.23, 0.214, 0.16, 0.198, 0.2},
             {0.14, 0.175, 0.27, 0.21, 0.34, 0.34, 0.3, 0.34},
             {1.3, 1.11, 0.985, 1.34, 0.77, 0.811, 1.4, 0.74}},
            {Scenario::MovingOpen,
             {2, 1.66, 1.66, 1.33, 2, 1, 1.66, 1},
             {0.02, 0.017, 0.017, 0.013, 0.02, 0.01, 0.017, 0.01},
             {0.14, 0.143, 0.2, 0.18, 0.15, 0.12, 0.205, 0.171},
             {0.1, 0.082, 0.084, 0.084, 0.14, 0.11, 0.16, 0.16},
             {1.87, 1.87, 3.6, 5.2, 1.76, 2, 2.04, 1.31}},
        }};

        // Link table columns: RX1 x15 h10/20/30, RX1 x30 h10/20/30, RX2 x15 ..., RX2 x30 ...
        constexpr std::array<double, 12> kGammaRx2 = {0, 0, 0, 0, 0, 0, 0.59, 0.67, 0.7, 0.39, 0.57, 0.64};
        constexpr std::array<double, 12> kCpolHover = {12.9, 7.3, 5.6, 8, 6.3, 6.0, 11.2, 8.2, 5.7, 11.3, 8.8, 8.0};
        constexpr std::array<double, 12> kCpolMoving = {0.6, 0.4, 2, 5.4, 4.6, 4.3, 1.8, 0.7, 2.2, 5.8, 2.5, 4.1};

        ScenarioKey column_key(Scenario s, std::size_t col)
        {
            ScenarioKey k;
            k.scenario = s;
            k.rx = (col % 4) < 2 ? Receiver::RX1 : Receiver::RX2;
            k.orientation = col < 4 ? Orientation::VV : Orientation::VH;
            k.x_m = (col % 2) == 0 ? 15 : 30;
            return k;
        }

        std::vector<SvCatalogRow> build_sv_catalog()
        {
            std::vector<SvCatalogRow> rows;
            for (const auto &t : kTables)
                for (std::size_t c = 0; c < 8; ++c)
                {
                    SvCatalogRow row;
                    row.key = column_key(t.scenario, c);
                    row.params = {t.n_c[c], t.chi[c], t.varsigma[c], t.eta[c], t.gamma[c], 1.0};
                    rows.push_back(row);
                }
            return rows;
        }

        std::vector<LinkCatalogRow> build_link_catalog()
        {
            std::vector<LinkCatalogRow> rows;
            for (Scenario s : {Scenario::HoverOpen, Scenario::MovingOpen})
            {
                const auto &cpol = s == Scenario::HoverOpen ? kCpolHover : kCpolMoving;
                for (std::size_t c = 0; c < 12; ++c)
                {
                    LinkCatalogRow row;
                    row.scenario = s;
                    row.rx = c < 6 ? Receiver::RX1 : Receiver::RX2;
                    row.x_m = (c % 6) < 3 ? 15 : 30;
                    row.h_m = 10 * static_cast<int>(c % 3 + 1);
                    if (row.rx == Receiver::RX2)
                        row.gamma_v = kGammaRx2[c];
                    row.c_pol_db = cpol[c];
                    rows.push_back(row);
                }
            }
            return rows;
        }

        bool is_integer_value(double v, int target)
        {
            return std::abs(v - static_cast<double>(target)) < 1e-9;
        }

        // Splits text into (1-based line number, content) pairs, stripping '\r'.
        std::vector<std::pair<std::size_t, std::string_view>> lines_of(std::string_view text)
        {
            std::vector<std::pair<std::size_t, std::string_view>> out;
            std::size_t n = 0, start = 0;
            while (start < text.size())
            {
                std::size_t end = text.find('\n', start);
                if (end == std::string_view::npos)
                    end = text.size();
                std::string_view line = text.substr(start, end - start);
                if (!line.empty() && line.back() == '\r')
                    line.remove_suffix(1);
                out.emplace_back(++n, line);
                start = end + 1;
            }
            return out;
        }

        template <typename Row, typename Fn>
        std::vector<Row> parse_table(std::string_view text, std::string_view magic, std::string_view header, Fn parse_row)
        {
            const auto lines = lines_of(text);
            if (lines.empty() || lines.front().second != magic)
                throw ParseError("expected '" + std::string(magic) + "'", 1);

            std::vector<Row> rows;
            bool seen_header = false;
            for (std::size_t i = 1; i < lines.size(); ++i)
            {
                const auto [ln, line] = lines[i];
                if (text::trim(line).empty() || line.front() == '#')
                    continue;
                if (!seen_header)
                {
                    if (line != header)
                        throw ParseError("expected column header '" + std::string(header) + "'", ln);
                    seen_header = true;
                    continue;
                }
                const auto f = text::split(line, ',');
                const std::size_t want = text::split(header, ',').size();
                if (f.size() != want)
                    throw ParseError("expected " + std::to_string(want) + " fields, got " + std::to_string(f.size()), ln,
                                     std::min(f.size(), want) + 1);
                std::size_t col = 0;
                try
                {
                    rows.push_back(parse_row(f, col));
                }
                catch (const std::invalid_argument &e)
                {
                    throw ParseError(e.what(), ln, col + 1);
                }
            }
            if (!seen_header)
                throw ParseError("missing column header", lines.size());
            return rows;
        }

        constexpr std::string_view kSvHeader = "scenario,rx,orientation,x_m,n_c,chi_per_ns,eta,varsigma_per_ns,gamma,omega00";
        constexpr std::string_view kLinkHeader = "scenario,rx,x_m,h_m,gamma_v,c_pol_db";
    }

    std::span<const SvCatalogRow> sv_catalog()
    {
        static const std::vector<SvCatalogRow> rows = build_sv_catalog();
        return rows;
    }

    std::span<const LinkCatalogRow> link_catalog()
    {
        static const std::vector<LinkCatalogRow> rows = build_link_catalog();
        return rows;
    }

    SVParams catalog_lookup(const ScenarioKey &key)
    {
        key.validate();
        for (const auto &row : sv_catalog())
            if (row.key && *row.key == key)
                return row.params;
        throw std::invalid_argument("No catalog row for " + describe(key) + ".");
    }

    std::optional<double> c_pol_lookup(Scenario scenario, Receiver rx, double x_m, double h_m)
    {
        for (const auto &row : link_catalog())
            if (row.scenario == scenario && row.rx == rx && is_integer_value(x_m, row.x_m) &&
                is_integer_value(h_m, row.h_m))
                return row.c_pol_db;
        return std::nullopt;
    }

    std::optional<double> reference_gamma_lookup(double x_m, double h_m)
    {
        for (const auto &row : link_catalog())
            if (row.rx == Receiver::RX2 && is_integer_value(x_m, row.x_m) && is_integer_value(h_m, row.h_m))
                return row.gamma_v;
        return std::nullopt;
    }

    std::string format_sv_catalog(std::span<const SvCatalogRow> rows)
    {
        std::string out;
        out += kSvCatalogMagic;
        out += "\n";
        out += kSvHeader;
        out += "\n";
        for (const auto &row : rows)
        {
            if (row.key)
            {
                out += std::string(to_string(row.key->scenario)) + "," + std::string(to_string(row.key->rx)) + "," +
                       std::string(to_string(row.key->orientation)) + "," + std::to_string(row.key->x_m);
            }
            else
                out += "custom,,,";
            const auto &p = row.params;
            for (double v : {p.n_c_mean, p.chi, p.eta, p.varsigma, p.gamma, p.omega00})
                out += "," + text::format_shortest(v);
            out += "\n";
        }
        return out;
    }

    std::vector<SvCatalogRow> parse_sv_catalog(std::string_view text)
    {
        return parse_table<SvCatalogRow>(
            text, kSvCatalogMagic, kSvHeader,
            [](const std::vector<std::string_view> &f, std::size_t &col)
            {
                SvCatalogRow row;
                if (f[0] != "custom")
                {
                    ScenarioKey k;
                    col = 0;
                    k.scenario = parse_scenario(f[0]);
                    col = 1;
                    k.rx = parse_receiver(f[1]);
                    col = 2;
                    k.orientation = parse_orientation(f[2]);
                    col = 3;
                    k.x_m = static_cast<int>(text::parse_int(f[3]));
                    k.validate();
                    row.key = k;
                }
                else
                {
                    for (col = 1; col < 4; ++col)
                        if (!f[col].empty())
                            throw std::invalid_argument("custom rows leave rx, orientation and x_m empty");
                }
                std::array<double, 6> v{};
                for (std::size_t i = 0; i < v.size(); ++i)
                {
                    col = 4 + i;
                    v[i] = text::parse_double(f[col]);
                }
                row.params = {v[0], v[1], v[3], v[2], v[4], v[5]};
                col = 4;
                row.params.validate();
                return row;
            });
    }

    std::string format_link_catalog(std::span<const LinkCatalogRow> rows)
    {
        std::string out;
        out += kLinkCatalogMagic;
        out += "\n";
        out += kLinkHeader;
        out += "\n";
        for (const auto &row : rows)
        {
            out += std::string(to_string(row.scenario)) + "," + std::string(to_string(row.rx)) + "," +
                   std::to_string(row.x_m) + "," + std::to_string(row.h_m) + ",";
            if (row.gamma_v)
                out += text::format_shortest(*row.gamma_v);
            out += "," + text::format_shortest(row.c_pol_db) + "\n";
        }
        return out;
    }

    std::vector<LinkCatalogRow> parse_link_catalog(std::string_view text)
    {
        return parse_table<LinkCatalogRow>(
            text, kLinkCatalogMagic, kLinkHeader,
            [](const std::vector<std::string_view> &f, std::size_t &col)
            {
                LinkCatalogRow row;
                col = 0;
                row.scenario = parse_scenario(f[0]);
                if (row.scenario == Scenario::HoverFoliage)
                    throw std::invalid_argument("link rows exist only for HoverOpen and MovingOpen");
                col = 1;
                row.rx = parse_receiver(f[1]);
                col = 2;
                row.x_m = static_cast<int>(text::parse_int(f[2]));
                col = 3;
                row.h_m = static_cast<int>(text::parse_int(f[3]));
                col = 4;
                if (!f[4].empty())
                {
                    const double g = text::parse_double(f[4]);
                    if (!(g >= 0.0 && g <= 1.0))
                        throw std::invalid_argument("gamma_v must lie in [0, 1]");
                    row.gamma_v = g;
                }
                col = 5;
                row.c_pol_db = text::parse_double(f[5]);
                return row;
            });
    }
}
