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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uavsv
{
    namespace
    {
        constexpr double kDbPerNeper = 10.0 / std::numbers::ln10; // dB per unit of natural-log power
        constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

        double tap_db(const Tap &t)
        {
            const double p = std::norm(t.amplitude);
            return p > 0.0 ? 10.0 * std::log10(p) : -std::numeric_limits<double>::infinity();
        }

        // Decay rate of one cluster from its positive taps, or NaN with fewer than three.
        double cluster_gamma(const Cir &cir, const std::vector<std::size_t> &members)
        {
            std::vector<FitPoint> pts;
            const double start = cir.taps[members.front()].delay_ns;
            for (std::size_t i : members)
            {
                const double db = tap_db(cir.taps[i]);
                if (std::isfinite(db))
                    pts.push_back({cir.taps[i].delay_ns - start, db});
            }
            if (pts.size() < 3)
                return kNaN;
            return -fit_linear_ls(pts).beta1 / kDbPerNeper;
        }

        double interval_union_length(std::vector<std::pair<double, double>> iv)
        {
            std::sort(iv.begin(), iv.end());
            double total = 0.0, cur_a = 0.0, cur_b = 0.0;
            bool open = false;
            for (const auto &[a, b] : iv)
            {
                if (!(b > a))
                    continue;
                if (!open || a > cur_b)
                {
                    if (open)
                        total += cur_b - cur_a;
                    cur_a = a;
                    cur_b = b;
                    open = true;
                }
                else
                    cur_b = std::max(cur_b, b);
            }
            if (open)
                total += cur_b - cur_a;
            return total;
        }

        struct Segmentation
        {
            std::vector<std::vector<TapCluster>> per_scan;
            std::vector<double> gammas; // Decay rates of simple clusters with at least three taps
            std::vector<FitPoint> leads; // (start, lead dB) of every cluster with a positive lead
        };

        Segmentation segment_all(std::span<const Cir> scans, const ClusterRule &rule,
                                 const std::optional<SegmentationModel> &model)
        {
            Segmentation s;
            s.per_scan.reserve(scans.size());
            for (const auto &cir : scans)
            {
                s.per_scan.push_back(segment_taps(cir, rule, model));
                for (const auto &c : s.per_scan.back())
                {
                    const Tap &lead = cir.taps[c.taps.front()];
                    if (std::isfinite(tap_db(lead)))
                        s.leads.push_back({lead.delay_ns, tap_db(lead)});
                    if (c.composite)
                        continue;
                    const double g = cluster_gamma(cir, c.taps);
                    if (std::isfinite(g))
                        s.gammas.push_back(g);
                }
            }
            return s;
        }

        bool distinct_delays(const std::vector<FitPoint> &pts)
        {
            for (const auto &p : pts)
                if (p.delay_ns != pts.front().delay_ns)
                    return true;
            return false;
        }

        double mean(const std::vector<double> &v)
        {
            if (v.empty())
                return kNaN;
            double s = 0.0;
            for (double x : v)
                s += x;
            return s / static_cast<double>(v.size());
        }
    }

    double exponential_rate_mle(std::span<const double> gaps, double censored_exposure)
    {
        if (censored_exposure < 0.0)
            throw std::invalid_argument("Censored exposure cannot be negative.");
        if (gaps.empty())
            return kNaN;
        double total = censored_exposure;
        for (double g : gaps)
        {
            if (g < 0.0)
                throw std::invalid_argument("Inter-arrival gaps cannot be negative.");
            total += g;
        }
        if (!(total > 0.0))
            return kNaN;
        return static_cast<double>(gaps.size()) / total;
    }

    std::vector<TapCluster> segment_taps(const Cir &cir, const ClusterRule &rule,
                                         const std::optional<SegmentationModel> &model)
    {
        rule.validate();
        std::vector<TapCluster> clusters;
        if (cir.taps.empty())
            return clusters;

        clusters.push_back({{0}, false});
        double start = cir.taps[0].delay_ns;
        double anchor_t = start;
        double anchor_db = tap_db(cir.taps[0]);
        double peak_db = anchor_db;
        double prev_db = anchor_db;
        bool dropped = false;

        for (std::size_t i = 1; i < cir.taps.size(); ++i)
        {
            const double t = cir.taps[i].delay_ns;
            const double v = tap_db(cir.taps[i]);

            bool candidate = false;
            if (std::isfinite(v))
            {
                if (model)
                {
                    const double intra = anchor_db - kDbPerNeper * model->gamma * (t - anchor_t);
                    const double lead = model->lead_line.beta0 + model->lead_line.beta1 * t;
                    candidate = v - intra >= rule.min_drop_db && std::abs(v - lead) < v - intra;
                }
                else
                    candidate = dropped && v > prev_db;
            }
            const bool live = t - start >= rule.min_duration_ns;

            if (candidate && live)
            {
                clusters.push_back({{i}, false});
                start = anchor_t = t;
                anchor_db = peak_db = v;
                dropped = false;
            }
            else
            {
                clusters.back().taps.push_back(i);
                if (candidate && model)
                {
                    // A lead inside the dead time: later taps decay from it, not from the old lead
                    anchor_t = t;
                    anchor_db = v;
                    clusters.back().composite = true;
                }
                if (v > peak_db)
                {
                    peak_db = v;
                    dropped = false;
                }
                if (peak_db - v >= rule.min_drop_db)
                    dropped = true;
            }
            prev_db = v;
        }

        // A cluster starting within min_duration of the window end cannot be told apart
        if (clusters.size() > 1 &&
            cir.window_ns - cir.taps[clusters.back().taps.front()].delay_ns < rule.min_duration_ns)
        {
            TapCluster tail = std::move(clusters.back());
            clusters.pop_back();
            clusters.back().taps.insert(clusters.back().taps.end(), tail.taps.begin(), tail.taps.end());
            clusters.back().composite = true;
        }
        return clusters;
    }

    SvEstimate estimate_sv_params(std::span<const Cir> scans, const ClusterRule &rule)
    {
        rule.validate();
        if (scans.empty())
            throw std::invalid_argument("Estimation needs at least one scan.");
        for (const auto &cir : scans)
            cir.validate();

        SvEstimate est;
        est.n_scans = scans.size();
        if (scans.size() < kRecommendedScans)
        {
            est.few_scans = true;
            est.warnings.push_back("only " + std::to_string(scans.size()) + " scans, at least " +
                                   std::to_string(kRecommendedScans) + " recommended");
        }

        // Start from the plain drop rule, then refine the two decay lines until they settle
        Segmentation seg = segment_all(scans, rule, std::nullopt);
        std::optional<SegmentationModel> model;
        for (int iter = 0; iter < 30; ++iter)
        {
            const double g = mean(seg.gammas);
            if (!std::isfinite(g) || !distinct_delays(seg.leads))
                break;
            const SegmentationModel next{std::max(0.0, g), fit_linear_ls(seg.leads)};
            const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); };
            if (model && close(model->gamma, next.gamma) && close(model->lead_line.beta0, next.lead_line.beta0) &&
                close(model->lead_line.beta1, next.lead_line.beta1))
                break;
            model = next;
            seg = segment_all(scans, rule, model);
        }

        const double d = rule.min_duration_ns;
        std::size_t cluster_events = 0, mpc_events = 0;
        double cluster_exposure = 0.0, mpc_exposure = 0.0;
        double first_power = 0.0;
        std::size_t first_count = 0;

        for (std::size_t s = 0; s < scans.size(); ++s)
        {
            const Cir &cir = scans[s];
            const auto &clusters = seg.per_scan[s];
            if (clusters.empty())
                continue;
            const double w = cir.window_ns;
            est.n_clusters += clusters.size();
            cluster_events += clusters.size() - 1;

            // Live time for cluster arrivals: after the first start, outside dead times and the
            // final min_duration of the window
            const double t_first = cir.taps[clusters.front().taps.front()].delay_ns;
            std::vector<std::pair<double, double>> dead{{std::max(t_first, w - d), w}};
            for (const auto &c : clusters)
            {
                const double a = cir.taps[c.taps.front()].delay_ns;
                dead.emplace_back(a, std::min(a + d, w));
            }
            cluster_exposure += std::max(0.0, (w - t_first) - interval_union_length(dead));

            for (std::size_t l = 0; l < clusters.size(); ++l)
            {
                const double a = cir.taps[clusters[l].taps.front()].delay_ns;
                const double b = l + 1 < clusters.size() ? cir.taps[clusters[l + 1].taps.front()].delay_ns : w;
                mpc_events += clusters[l].taps.size() - 1;
                mpc_exposure += b - a;
            }

            first_power += std::norm(cir.taps[clusters.front().taps.front()].amplitude);
            ++first_count;
        }

        SVParams &p = est.params;
        p.n_c_mean = static_cast<double>(est.n_clusters) / static_cast<double>(scans.size());
        p.omega00 = first_count > 0 ? first_power / static_cast<double>(first_count) : kNaN;

        if (cluster_events > 0 && cluster_exposure > 0.0)
            p.chi = static_cast<double>(cluster_events) / cluster_exposure;
        else
        {
            p.chi = kNaN;
            est.chi_defined = false;
            est.warnings.push_back("no scan shows a second cluster, chi undefined");
        }

        if (mpc_events > 0 && mpc_exposure > 0.0)
            p.varsigma = static_cast<double>(mpc_events) / mpc_exposure;
        else
        {
            p.varsigma = kNaN;
            est.warnings.push_back("no cluster holds a second tap, varsigma undefined");
        }

        est.n_gamma_clusters = seg.gammas.size();
        p.gamma = mean(seg.gammas);
        if (!std::isfinite(p.gamma))
            est.warnings.push_back("no cluster holds three taps, gamma undefined");
        else if (p.gamma < 0.0)
        {
            est.warnings.push_back("fitted gamma is negative, clamped to 0");
            p.gamma = 0.0;
        }

        if (distinct_delays(seg.leads))
        {
            p.eta = -fit_linear_ls(seg.leads).beta1 / kDbPerNeper;
            if (p.eta < 0.0)
            {
                est.warnings.push_back("fitted eta is negative, clamped to 0");
                p.eta = 0.0;
            }
        }
        else
        {
            p.eta = kNaN;
            est.warnings.push_back("cluster leads share one delay, eta undefined");
        }
        return est;
    }
}
