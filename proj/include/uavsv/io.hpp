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

#ifndef UAVSV_IO_HPP
#define UAVSV_IO_HPP

#include "uavsv/analysis.hpp"
#include "uavsv/pathloss.hpp"
#include "uavsv/svmodel.hpp"
#include "uavsv/text.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uavsv
{
    inline constexpr std::string_view kCirMagic = "# uavsv-cir v1";

    // CIR ensemble on disk:
    //   # uavsv-cir v1
    //   # sample_spacing_ns=<v>
    //   # window_ns=<v>
    //   # n_scans=<n>
    //   # seed=<u64>
    //   # scenario=<scenario,rx,orientation,x_m | custom>
    //   scan_id,delay_ns,real,imag
    //   <rows sorted by scan_id, delay_ns>
    // Delays are written in shortest round-trip form, amplitudes with 9 significant digits.
    struct CirFile
    {
        double sample_spacing_ns = kDefaultSampleSpacingNs;
        double window_ns = kDefaultWindowNs;
        std::uint64_t seed = 0;
        std::optional<ScenarioKey> key;
        std::vector<Cir> scans;

        bool operator==(const CirFile &) const = default;
    };

    // Builds a file from a synthesized ensemble; grid and metadata come from the first scan.
    CirFile make_cir_file(std::vector<Cir> scans, std::uint64_t seed, std::optional<ScenarioKey> key);

    std::string format_cir_file(const CirFile &file);
    CirFile parse_cir_file(std::string_view text); // throws ParseError

    // Everything a command needs to reproduce its output.
    struct RunConfig
    {
        std::uint64_t seed = 1;
        std::size_t n_scans = kDefaultScans;
        ScenarioKey key;
        RfConfig rf;
        ClusterRule rule;
        SynthesisOptions synthesis;
        std::string output_dir = ".";
        unsigned threads = 1; // Worker count, never changes results

        void validate() const; // throws std::invalid_argument
    };

    std::string run_config_to_json(const RunConfig &cfg);
    RunConfig run_config_from_json(std::string_view json); // throws ParseError

    // Whole-file helpers, throwing IoError.
    std::string read_text_file(const std::filesystem::path &path);
    void write_text_file(const std::filesystem::path &path, std::string_view content);
}

#endif
