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

#include "uavsv/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace uavsv
{
    void ClusterRule::validate() const
    {
        if (!(min_duration_ns >= 0.0) || !std::isfinite(min_duration_ns))
            throw std::invalid_argument("Minimum cluster duration cannot be negative.");
        if (!(min_drop_db > 0.0) || !std::isfinite(min_drop_db))
            throw std::invalid_argument("Cluster drop threshold must be positive.");
        if (!(dynamic_range_db > 0.0) || !std::isfinite(dynamic_range_db))
            throw std::invalid_argument("Dynamic range must be positive.");
    }

    ClusterSet detect_clusters(const Pdp &pdp, const ClusterRule &rule)
    {
        rule.validate();
        if (pdp.bins.empty())
            throw std::invalid_argument("Cannot detect clusters in an empty PDP.");

        const PdpDb db = pdp_to_db(pdp, rule.dynamic_range_db);
        const double peak_db = db.floor_db + rule.dynamic_range_db;
        const std::size_t n = db.power_db.size();

        std::size_t i0 = 0;
        while (i0 < n && db.floored[i0])
            ++i0;

        ClusterSet out;
        out.rule = rule;

        auto open = [&](std::size_t i)
        {
            Cluster c;
            c.first_bin = i;
            c.start_ns = db.delay_ns[i];
            c.peak_power_db = db.power_db[i];
            c.lead_delay_ns = db.delay_ns[i];
            out.clusters.push_back(c);
        };

        open(i0);
        bool dropped = false;
        std::size_t last_above = i0;
        for (std::size_t i = i0 + 1; i < n; ++i)
        {
            Cluster &cur = out.clusters.back();
            const double v = db.power_db[i];
            if (!db.floored[i])
            {
                last_above = i;
                const bool rise = v > db.power_db[i - 1];
                if (dropped && rise && db.delay_ns[i] - cur.start_ns >= rule.min_duration_ns)
                {
                    cur.last_bin = i - 1;
                    cur.end_ns = db.delay_ns[i];
                    open(i);
                    dropped = false;
                    continue;
                }
                if (v > cur.peak_power_db)
                {
                    cur.peak_power_db = v;
                    cur.lead_delay_ns = db.delay_ns[i];
                    dropped = false;
                }
            }
            if (cur.peak_power_db - v >= rule.min_drop_db)
                dropped = true;
        }

        Cluster &last = out.clusters.back();
        last.last_bin = std::max(last_above, last.first_bin);
        last.end_ns = db.delay_ns[last.last_bin];

        if (out.clusters.size() > 1 && last.end_ns - last.start_ns < rule.min_duration_ns)
        {
            const Cluster tail = last;
            out.clusters.pop_back();
            Cluster &prev = out.clusters.back();
            prev.last_bin = tail.last_bin;
            prev.end_ns = tail.end_ns;
            if (tail.peak_power_db > prev.peak_power_db)
            {
                prev.peak_power_db = tail.peak_power_db;
                prev.lead_delay_ns = tail.lead_delay_ns;
            }
        }

        for (auto &c : out.clusters)
            c.peak_power_db -= peak_db;
        return out;
    }
}
