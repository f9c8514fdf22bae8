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
#include "uavsv/io.hpp"
#include "uavsv/text.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

using namespace uavsv;

TEST_CASE("SV catalog covers every scenario once", "[catalog]")
{
    const auto rows = sv_catalog();
    REQUIRE(rows.size() == 24);

    std::set<ScenarioKey> keys;
    for (const auto &r : rows)
    {
        REQUIRE(r.key);
        keys.insert(*r.key);
        CHECK(std::abs(r.params.chi - r.params.n_c_mean / 100.0) <= 0.001 + 1e-12);
        CHECK_NOTHROW(r.params.validate());
    }
    CHECK(keys.size() == 24);
}

TEST_CASE("SV catalog spot values", "[catalog]")
{
    const auto a = catalog_lookup({Scenario::HoverOpen, Receiver::RX1, Orientation::VV, 15});
    CHECK(a.n_c_mean == 3.33);
    CHECK(a.chi == 0.033);
    CHECK(a.eta == 0.23);
    CHECK(a.varsigma == 0.1);
    CHECK(a.gamma == 8.7);

    const auto b = catalog_lookup({Scenario::HoverFoliage, Receiver::RX2, Orientation::VH, 30});
    CHECK(b.chi == 0.013);
    CHECK(b.gamma == 0.74);

    CHECK_THROWS_AS(catalog_lookup({Scenario::HoverOpen, Receiver::RX1, Orientation::VV, 20}),
                    std::invalid_argument);
}

TEST_CASE("link catalog lookups", "[catalog]")
{
    CHECK(link_catalog().size() == 24);
    CHECK(*c_pol_lookup(Scenario::HoverOpen, Receiver::RX1, 15, 10) == 12.9);
    CHECK(*c_pol_lookup(Scenario::HoverOpen, Receiver::RX2, 30, 10) == 11.3);
    CHECK_FALSE(c_pol_lookup(Scenario::HoverFoliage, Receiver::RX1, 15, 10));
    CHECK_FALSE(c_pol_lookup(Scenario::HoverOpen, Receiver::RX1, 15, 12));

    CHECK(*reference_gamma_lookup(15, 10) == 0.59);
    CHECK(*reference_gamma_lookup(30, 10) == 0.39);
    CHECK_FALSE(reference_gamma_lookup(20, 10));
}

TEST_CASE("scenario key parsing", "[catalog]")
{
    const ScenarioKey k{Scenario::MovingOpen, Receiver::RX2, Orientation::VH, 30};
    CHECK(describe(k) == "MovingOpen,RX2,VH,30");
    CHECK(parse_scenario_key(describe(k)) == k);
    CHECK(parse_scenario("foliage") == Scenario::HoverFoliage);
    CHECK(parse_receiver("rx1") == Receiver::RX1);
    CHECK(receiver_height_m(Receiver::RX2) == kRx2HeightM);
    CHECK_THROWS_AS(parse_scenario("Indoor"), std::invalid_argument);
    CHECK_THROWS_AS((ScenarioKey{Scenario::HoverOpen, Receiver::RX1, Orientation::VV, 45}.validate()),
                    std::invalid_argument);
}

TEST_CASE("catalog text forms round-trip", "[catalog]")
{
    const std::string sv = format_sv_catalog(sv_catalog());
    const auto sv_rows = parse_sv_catalog(sv);
    REQUIRE(sv_rows.size() == 24);
    CHECK(std::equal(sv_rows.begin(), sv_rows.end(), sv_catalog().begin()));
    CHECK(format_sv_catalog(sv_rows) == sv);

    const std::string link = format_link_catalog(link_catalog());
    const auto link_rows = parse_link_catalog(link);
    CHECK(std::equal(link_rows.begin(), link_rows.end(), link_catalog().begin()));
    CHECK(format_link_catalog(link_rows) == link);

    SvCatalogRow custom;
    custom.params.chi = 0.05;
    const auto back = parse_sv_catalog(format_sv_catalog(std::span<const SvCatalogRow>(&custom, 1)));
    REQUIRE(back.size() == 1);
    CHECK_FALSE(back[0].key);
    CHECK(back[0].params == custom.params);
}

TEST_CASE("catalog parse errors carry positions", "[catalog]")
{
    std::string text = format_sv_catalog(sv_catalog());
    const auto pos = text.find("0.033");
    text.replace(pos, 5, "abc");
    try
    {
        parse_sv_catalog(text);
        FAIL("expected ParseError");
    }
    catch (const ParseError &e)
    {
        CHECK(e.line() == 3);
        CHECK(e.column() == 6);
    }

    CHECK_THROWS_AS(parse_sv_catalog("scenario,rx\n"), ParseError);
    CHECK_THROWS_AS(parse_link_catalog(std::string(kLinkCatalogMagic) + "\nwrong,header\n"), ParseError);
}

TEST_CASE("shipped data files match the built-in tables", "[catalog]")
{
    const std::string dir = UAVSV_DATA_DIR;
    const std::string sv = read_text_file(dir + "/sv_params.csv");
    const std::string link = read_text_file(dir + "/link_params.csv");

    CHECK(sv == format_sv_catalog(sv_catalog()));
    CHECK(link == format_link_catalog(link_catalog()));

    // Frozen checksums guard the tables against silent edits
    CHECK(text::fnv1a64(sv) == 0x74064dd9f9704119ULL);
    CHECK(text::fnv1a64(link) == 0xb1ffa7077ae79f2cULL);
}
