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

#include "uavsv/commands.hpp"

#include <cmath>
#include <optional>

namespace uavsv
{
    namespace
    {
        std::string db2(double v)
        {
            return text::format_fixed(v, 2);
        }

        std::string lin9(double v)
        {
            return text::format_significant(v, 9);
        }

        struct ScanRow
        {
            std::optional<ChannelStats> stats;
            std::optional<FitReport> fit;
        };

        std::string stats_row(const std::string &scope, const ScanRow &r)
        {
            std::string s = scope + ",";
            if (r.stats)
            {
                s += text::format_fixed(r.stats->rms_ds_ns, 4) + ",";
                if (r.stats->k_factor_db)
                    s += db2(*r.stats->k_factor_db);
                s += "," + std::to_string(r.stats->n_significant_mpcs);
            }
            else
                s += ",,";
            s += ",";
            if (r.fit)
                s += db2(r.fit->mean_abs_residual_sv) + "," + db2(r.fit->mean_abs_residual_single);
            else
                s += ",";
            return s + "\n";
        }

        ScanRow analyze_pdp(const Pdp &pdp, bool cross_pol, const ClusterRule &rule)
        {
            ScanRow row;
            if (!(pdp.peak_power() > 0.0))
                return row;
            row.stats = channel_stats(pdp, cross_pol);
            row.fit = fit_sv_piecewise(pdp, detect_clusters(pdp, rule));
            return row;
        }
    }

    CommandResult cmd_synthesize(const RunConfig &cfg)
    {
        cfg.validate();
        const SVParams params = catalog_lookup(cfg.key);
        auto scans = synthesize_ensemble(params, cfg.n_scans, cfg.seed, cfg.synthesis, cfg.threads, cfg.key);

        // Cluster counts come from replaying each substream's layout draws
        std::vector<std::size_t> clusters(cfg.n_scans);
        parallel_for(cfg.n_scans, cfg.threads,
                     [&](std::size_t i)
                     {
                         RandomStream rng = RandomStream::substream(cfg.seed, i);
                         clusters[i] = draw_cluster_layout(params, rng, cfg.synthesis).size();
                     });
        std::size_t n_clusters = 0, n_taps = 0;
        for (std::size_t i = 0; i < scans.size(); ++i)
        {
            n_clusters += clusters[i];
            n_taps += scans[i].taps.size();
        }
        const double n = static_cast<double>(scans.size());

        CommandResult out;
        out.files.push_back({"cir.csv", format_cir_file(make_cir_file(std::move(scans), cfg.seed, cfg.key))});
        out.summary = "synthesized " + std::to_string(cfg.n_scans) + " scans for " + describe(cfg.key) +
                      "\nmean clusters per scan: " + text::format_fixed(static_cast<double>(n_clusters) / n, 3) +
                      "\nmean taps per scan: " + text::format_fixed(static_cast<double>(n_taps) / n, 3) + "\n";
        return out;
    }

    CommandResult cmd_analyze(const CirFile &file, const RunConfig &cfg)
    {
        cfg.rule.validate();
        if (file.scans.empty())
            throw std::invalid_argument("CIR file holds no scans.");
        const bool cross_pol = file.key && file.key->orientation == Orientation::VH;

        const Pdp pdp = compute_pdp(file.scans);
        std::vector<ScanRow> rows(file.scans.size());
        parallel_for(file.scans.size(), cfg.threads,
                     [&](std::size_t i)
                     {
                         const Cir &cir = file.scans[i];
                         rows[i] = analyze_pdp(compute_pdp(std::span<const Cir>(&cir, 1)), cross_pol, cfg.rule);
                     });
        const ScanRow ensemble = analyze_pdp(pdp, cross_pol, cfg.rule);

        CommandResult out;

        std::string pdp_csv = "delay_ns,power_db\n";
        if (pdp.peak_power() > 0.0)
        {
            const PdpDb db = pdp_to_db(pdp.normalized(), cfg.rule.dynamic_range_db);
            for (std::size_t k = 0; k < db.delay_ns.size(); ++k)
                pdp_csv += lin9(db.delay_ns[k]) + "," + db2(db.power_db[k]) + "\n";
        }
        out.files.push_back({"pdp.csv", std::move(pdp_csv)});

        std::string cl_csv =
            "cluster_id,start_ns,end_ns,lead_delay_ns,peak_power_db,n_points,beta0_db,beta1_db_per_ns,flat_fallback\n";
        std::size_t n_clusters = 0;
        if (pdp.peak_power() > 0.0)
        {
            const ClusterSet cs = detect_clusters(pdp, cfg.rule);
            n_clusters = cs.clusters.size();
            for (std::size_t l = 0; l < cs.clusters.size(); ++l)
            {
                const Cluster &c = cs.clusters[l];
                const ClusterFit &f = ensemble.fit->per_cluster[l];
                cl_csv += std::to_string(l) + "," + lin9(c.start_ns) + "," + lin9(c.end_ns) + "," +
                          lin9(c.lead_delay_ns) + "," + db2(c.peak_power_db) + "," + std::to_string(f.n_points) + "," +
                          db2(f.fit.beta0) + "," + text::format_fixed(f.fit.beta1, 4) + "," +
                          (f.flat_fallback ? "1" : "0") + "\n";
            }
        }
        out.files.push_back({"clusters.csv", std::move(cl_csv)});

        std::string st_csv = "scope,rms_ds_ns,k_factor_db,n_mpcs,residual_sv_db,residual_single_db\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            st_csv += stats_row("scan:" + std::to_string(i), rows[i]);
        st_csv += stats_row("ensemble", ensemble);
        out.files.push_back({"stats.csv", std::move(st_csv)});

        out.summary = "analyzed " + std::to_string(file.scans.size()) + " scans\nclusters in ensemble PDP: " +
                      std::to_string(n_clusters) + "\n";
        if (ensemble.stats)
            out.summary += "ensemble RMS delay spread: " + text::format_fixed(ensemble.stats->rms_ds_ns, 4) + " ns\n";
        if (ensemble.fit)
            out.summary += "mean abs residual SV/single: " + db2(ensemble.fit->mean_abs_residual_sv) + " / " +
                           db2(ensemble.fit->mean_abs_residual_single) + " dB\n";
        return out;
    }

    CommandResult cmd_pathloss(const PathlossRequest &req)
    {
        req.rf.validate();
        req.antenna.validate();
        if (req.x_m.empty() || req.h_m.empty())
            throw std::invalid_argument("Path-loss grid needs at least one x and one h.");

        const double h_rx = receiver_height_m(req.rx);
        std::string csv = "x_m,h_m,model,theta_deg,total_db,penalty_db,gamma_v,vv_db,vh_db,clamped\n";
        std::size_t n_rows = 0;
        for (double x : req.x_m)
            for (double h : req.h_m)
            {
                if (!std::isfinite(x) || !std::isfinite(h) || x < 0.0 || !(h > 0.0))
                    throw std::invalid_argument("Grid values must be finite, x >= 0 and h > 0.");
                const LinkGeometry g{x, h, h_rx};

                PathLossResult vv;
                double theta = elevation_angle(g);
                switch (req.scenario)
                {
                case Scenario::HoverFoliage:
                    vv = pl_foliage(req.rf);
                    break;
                case Scenario::HoverOpen:
                    vv = req.rx == Receiver::RX1 ? pl_hover_rx1_vv(g, req.antenna, req.rf)
                                                 : pl_hover_rx2_vv(g, req.antenna, req.rf);
                    break;
                case Scenario::MovingOpen:
                    vv = req.rx == Receiver::RX1 ? pl_move_rx1_vv(g, req.antenna, req.rf)
                                                 : pl_move_rx2_vv(g, req.antenna, req.rf);
                    break;
                }
                if (req.rx == Receiver::RX2 && req.scenario != Scenario::HoverFoliage)
                    theta = two_ray_geometry(g).angles.theta_prime;

                std::optional<PathLossResult> vh;
                if (vv.clamped)
                    vh = vv;
                else if (const auto c_pol = c_pol_lookup(req.scenario, req.rx, x, h))
                    vh = pl_vh(vv, {Orientation::VH, c_pol});

                if (req.orientation == Orientation::VH && !vh)
                    throw std::invalid_argument("No measured c_pol for " + std::string(to_string(req.scenario)) + " " +
                                                std::string(to_string(req.rx)) + " at x=" + text::format_shortest(x) +
                                                " m, h=" + text::format_shortest(h) + " m.");

                const PathLossResult &pick = req.orientation == Orientation::VH ? *vh : vv;
                csv += text::format_shortest(x) + "," + text::format_shortest(h) + "," + pick.model + "," +
                       db2(rad_to_deg(theta)) + "," + db2(pick.total_db) + "," + db2(pick.penalty_db) + ",";
                if (pick.gamma_v)
                    csv += lin9(*pick.gamma_v);
                csv += "," + db2(vv.total_db) + ",";
                if (vh)
                    csv += db2(vh->total_db);
                csv += std::string(",") + (pick.clamped ? "1" : "0") + "\n";
                ++n_rows;
            }

        CommandResult out;
        out.files.push_back({"pathloss.csv", std::move(csv)});
        out.summary = "path loss over " + std::to_string(n_rows) + " geometries\n";
        return out;
    }

    CommandResult cmd_estimate(const CirFile &file, const ClusterRule &rule)
    {
        const SvEstimate est = estimate_sv_params(file.scans, rule);

        const SvCatalogRow row{file.key, est.params};
        std::string body = format_sv_catalog(std::span<const SvCatalogRow>(&row, 1));
        const auto first_nl = body.find('\n') + 1;
        std::string notes = "# n_scans=" + std::to_string(est.n_scans) + " n_clusters=" + std::to_string(est.n_clusters) +
                            " gamma_clusters=" + std::to_string(est.n_gamma_clusters) + "\n";
        for (const auto &w : est.warnings)
            notes += "# warning: " + w + "\n";
        body.insert(first_nl, notes);

        CommandResult out;
        out.files.push_back({"estimate.csv", body});
        out.summary = body;
        return out;
    }

    CommandResult cmd_catalog()
    {
        CommandResult out;
        out.files.push_back({"sv_params.csv", format_sv_catalog(sv_catalog())});
        out.files.push_back({"link_params.csv", format_link_catalog(link_catalog())});
        out.summary = out.files[0].content + "\n" + out.files[1].content;
        return out;
    }

    void write_outputs(const CommandResult &result, const std::filesystem::path &dir)
    {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw IoError("cannot create '" + dir.string() + "': " + ec.message());
        for (const auto &f : result.files)
            write_text_file(dir / f.name, f.content);
    }
}
