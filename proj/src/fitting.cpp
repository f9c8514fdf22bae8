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
    LinearFit fit_linear_ls(std::span<const FitPoint> points)
    {
        if (points.size() < 2)
            throw std::invalid_argument("A linear fit needs at least two points.");

        double mx = 0.0, my = 0.0;
        for (const auto &p : points)
        {
            mx += p.delay_ns;
            my += p.power_db;
        }
        const double n = static_cast<double>(points.size());
        mx /= n;
        my /= n;

        double sxx = 0.0, sxy = 0.0;
        for (const auto &p : points)
        {
            const double dx = p.delay_ns - mx;
            sxx += dx * dx;
            sxy += dx * (p.power_db - my);
        }
        if (!(sxx > 0.0))
            throw std::invalid_argument("A linear fit needs two distinct delays.");

        LinearFit fit;
        fit.beta1 = sxy / sxx;
        fit.beta0 = my - fit.beta1 * mx;
        return fit;
    }

    namespace
    {
        double mean_level(std::span<const FitPoint> points)
        {
            double s = 0.0;
            for (const auto &p : points)
                s += p.power_db;
            return points.empty() ? 0.0 : s / static_cast<double>(points.size());
        }

        double abs_residual_sum(std::span<const FitPoint> points, const LinearFit &fit)
        {
            double s = 0.0;
            for (const auto &p : points)
                s += std::abs(p.power_db - (fit.beta0 + fit.beta1 * p.delay_ns));
            return s;
        }
    }

    FitReport fit_sv_piecewise(const Pdp &pdp, const ClusterSet &clusters)
    {
        const PdpDb db = pdp_to_db(pdp, clusters.rule.dynamic_range_db);

        FitReport report;
        std::vector<FitPoint> all;
        double sv_sum = 0.0;
        for (const auto &c : clusters.clusters)
        {
            if (c.last_bin >= db.power_db.size() || c.first_bin > c.last_bin)
                throw std::invalid_argument("Cluster bins do not match the PDP.");

            std::vector<FitPoint> pts;
            for (std::size_t k = c.first_bin; k <= c.last_bin; ++k)
                if (!db.floored[k])
                {
                    pts.push_back({db.delay_ns[k] - c.start_ns, db.power_db[k]});
                    all.push_back({db.delay_ns[k], db.power_db[k]});
                }

            ClusterFit cf;
            cf.n_points = pts.size();
            if (pts.size() >= 2)
                cf.fit = fit_linear_ls(pts);
            else
            {
                cf.fit = {mean_level(pts), 0.0};
                cf.flat_fallback = true;
            }
            sv_sum += abs_residual_sum(pts, cf.fit);
            report.per_cluster.push_back(cf);
        }

        report.n_points = all.size();
        report.single_fit = all.size() >= 2 ? fit_linear_ls(all) : LinearFit{mean_level(all), 0.0};
        if (!all.empty())
        {
            const double n = static_cast<double>(all.size());
            report.mean_abs_residual_sv = sv_sum / n;
            report.mean_abs_residual_single = abs_residual_sum(all, report.single_fit) / n;
        }
        return report;
    }
}
