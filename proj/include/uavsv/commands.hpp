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

#ifndef UAVSV_COMMANDS_HPP
#define UAVSV_COMMANDS_HPP

#include "uavsv/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace uavsv
{
    struct OutputFile
    {
        std::string name; // File name inside the output directory
        std::string content;
    };

    // Files a command produces plus a short human-readable summary. Commands never touch the
    // file system themselves, so their output can be compared or written anywhere.
    struct CommandResult
    {
        std::vector<OutputFile> files;
        std::string summary;
    };

    // cir.csv for the catalog row cfg.key. Summary reports mean cluster and tap counts.
    CommandResult cmd_synthesize(const RunConfig &cfg);

    // pdp.csv, clusters.csv and stats.csv for a CIR ensemble. Uses cfg.rule and cfg.threads.
    CommandResult cmd_analyze(const CirFile &file, const RunConfig &cfg);

    struct PathlossRequest
    {
        Scenario scenario = Scenario::HoverOpen;
        Receiver rx = Receiver::RX1;
        Orientation orientation = Orientation::VV;
        std::vector<double> x_m{15.0, 30.0};
        std::vector<double> h_m{10.0, 20.0, 30.0};
        RfConfig rf;
        AntennaModel antenna;
    };

    // pathloss.csv sweep over x_m by h_m. A VH request on a geometry without a measured c_pol
    // throws std::invalid_argument.
    CommandResult cmd_pathloss(const PathlossRequest &req);

    // estimate.csv in sv-catalog format, keyed like the input file.
    CommandResult cmd_estimate(const CirFile &file, const ClusterRule &rule);

    // sv_params.csv and link_params.csv from the compiled-in tables.
    CommandResult cmd_catalog();

    // Writes every file of `result` below `dir`, creating it if needed. Throws IoError.
    void write_outputs(const CommandResult &result, const std::filesystem::path &dir);
}

#endif
