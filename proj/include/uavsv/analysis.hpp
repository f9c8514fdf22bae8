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

#ifndef UAVSV_ANALYSIS_HPP
#define UAVSV_ANALYSIS_HPP

#include "uavsv/svmodel.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace uavsv
{
    // ---------------------------------------------------------------- PDP

    enum class PdpNormalization
    {
        Absolute,
        PeakNormalized
    };

    struct PdpBin
    {
        double delay_ns = 0.0;
        double power = 0.0; // Linear
    };

    // Power delay profile on a uniform grid starting at 0 ns.
    struct Pdp
    {
        std::vector<PdpBin> bins;
        std::size_t n_scans = 0;
        PdpNormalization normalization = PdpNormalization::Absolute;
        double sample_spacing_ns = kDefaultSampleSpacingNs;

        double peak_power() const;
        Pdp normalized() const; // Peak scaled to 1; throws on an all-zero profile
    };

    // Per-bin mean of |H|^2. Taps are binned to the nearest grid sample; taps of one scan that
    // share a bin add coherently. Throws std::invalid_argument on an empty list or mismatched grids.
    Pdp compute_pdp(std::span<const Cir> scans);

    // dB view of a PDP with the floor peak - dynamic_range_db. Floored bins carry the floor value.
    struct PdpDb
    {
        std::vector<double> delay_ns;
        std::vector<double> power_db;
        std::vector<bool> floored;
        double floor_db = 0.0;
    };
    PdpDb pdp_to_db(const Pdp &pdp, double dynamic_range_db);

    // ----------------------------------------------------------- Clusters

    struct ClusterRule
    {
        double min_duration_ns = 2.5;
        double min_drop_db = 8.0;
        double dynamic_range_db = 48.0;

        void validate() const; // throws std::invalid_argument
        bool operator==(const ClusterRule &) const = default;
    };

    struct Cluster
    {
        double start_ns = 0.0;
        double end_ns = 0.0;        // Next cluster start, or last above-floor bin for the final cluster
        double peak_power_db = 0.0; // Relative to the PDP peak
        double lead_delay_ns = 0.0; // Delay of the strongest bin
        std::size_t first_bin = 0;
        std::size_t last_bin = 0; // Inclusive
    };

    struct ClusterSet
    {
        std::vector<Cluster> clusters;
        ClusterRule rule;
    };

    // Greedy left-to-right segmentation. A cluster stays open until the profile has fallen at least
    // min_drop_db below its running peak; the next local rise then starts a new cluster. Rises
    // closer than min_duration_ns to the current start are absorbed, and a final cluster shorter
    // than min_duration_ns joins its predecessor. Throws std::invalid_argument on an empty PDP or
    // one without positive power.
    ClusterSet detect_clusters(const Pdp &pdp, const ClusterRule &rule = {});

    // ------------------------------------------------------------ Fitting

    struct FitPoint
    {
        double delay_ns = 0.0;
        double power_db = 0.0;
    };

    struct LinearFit
    {
        double beta0 = 0.0; // dB
        double beta1 = 0.0; // dB/ns
    };

    // Ordinary least squares. Throws std::invalid_argument with fewer than two distinct delays.
    LinearFit fit_linear_ls(std::span<const FitPoint> points);

    struct ClusterFit
    {
        LinearFit fit;              // Delay axis relative to the cluster start
        std::size_t n_points = 0;
        bool flat_fallback = false; // Fewer than two points, fit is the mean level
    };

    struct FitReport
    {
        std::vector<ClusterFit> per_cluster;
        LinearFit single_fit; // Absolute delay axis
        double mean_abs_residual_sv = 0.0;
        double mean_abs_residual_single = 0.0;
        std::size_t n_points = 0;
    };

    // Piecewise per-cluster fits against one global fit, over the same above-floor bins.
    FitReport fit_sv_piecewise(const Pdp &pdp, const ClusterSet &clusters);

    // ---------------------------------------------------- Channel metrics

    // Power-weighted delay standard deviation. Throws std::invalid_argument on zero total power.
    double rms_delay_spread(const Cir &cir);
    double rms_delay_spread(const Pdp &pdp);

    // 10 log10(A^2 / sum of the other tap powers). The LOS tap is the earliest tap within 3 dB of
    // the strongest one. Returns +inf when no other tap carries power. Throws std::invalid_argument
    // for VH-keyed inputs and for all-zero responses.
    double ricean_k_factor(const Cir &cir);
    double ricean_k_factor(const Pdp &pdp);

    inline constexpr double kDefaultMpcThreshold = 0.2;

    // Taps with |a| >= threshold_fraction * max |a|.
    std::size_t count_significant_mpcs(const Cir &cir, double threshold_fraction = kDefaultMpcThreshold);
    std::size_t count_significant_mpcs(const Pdp &pdp, double threshold_fraction = kDefaultMpcThreshold);

    struct ChannelStats
    {
        double rms_ds_ns = 0.0;
        std::optional<double> k_factor_db; // Absent for VH inputs
        std::size_t n_significant_mpcs = 0;
        double threshold_fraction = kDefaultMpcThreshold;
    };

    ChannelStats channel_stats(const Cir &cir, double threshold_fraction = kDefaultMpcThreshold);
    ChannelStats channel_stats(const Pdp &pdp, bool cross_polarized,
                               double threshold_fraction = kDefaultMpcThreshold);

    // -------------------------------------------------------------- CLEAN

    struct CleanOptions
    {
        double stop_fraction = 0.2;  // Stop once the residual peak drops below this share of the input peak
        std::size_t max_iters = 1000;
    };

    struct CleanResult
    {
        Cir cir;
        bool converged = false; // False when max_iters ran out first
        std::size_t iterations = 0;
        double residual_peak = 0.0;
    };

    // Iterative template subtraction on real sampled waveforms that share sample_spacing_ns.
    // Delays are lags of the template start, so raw == template yields one tap at 0 ns.
    // Throws std::invalid_argument for an all-zero template or a bad spacing.
    CleanResult clean_deconvolve(std::span<const double> raw, std::span<const double> pulse,
                                 double sample_spacing_ns, const CleanOptions &opts = {});

    // --------------------------------------------------------- Estimation

    struct SvEstimate
    {
        SVParams params;
        bool chi_defined = true; // False when no scan shows a second cluster
        bool few_scans = false;  // Fewer than kRecommendedScans inputs
        std::size_t n_scans = 0;
        std::size_t n_clusters = 0;
        std::size_t n_gamma_clusters = 0; // Simple clusters with at least three taps
        std::vector<std::string> warnings;
    };

    inline constexpr std::size_t kRecommendedScans = 10;

    // Rate MLE of right-censored exponential gaps: count / (sum of gaps + censored_exposure).
    // Returns NaN without any observed gap.
    double exponential_rate_mle(std::span<const double> gaps, double censored_exposure = 0.0);

    struct TapCluster
    {
        std::vector<std::size_t> taps; // Indices into Cir::taps, lead first
        bool composite = false;        // Absorbed another cluster's lead inside the dead time
    };

    // Decay model used to split a scan into clusters.
    struct SegmentationModel
    {
        double gamma = 0.0;     // Intra-cluster decay rate, 1/ns
        LinearFit lead_line;    // Cluster lead power in dB against absolute delay
    };

    // One scan's taps split into clusters. Without a model the drop rule of detect_clusters is
    // applied to the tap sequence. With one, a tap starts a new cluster when it exceeds the
    // intra-cluster decay predicted from the current lead by min_drop_db and lies closer to the
    // lead line than to that prediction. Leads arriving within min_duration_ns of the current
    // start are absorbed and re-anchor the prediction.
    std::vector<TapCluster> segment_taps(const Cir &cir, const ClusterRule &rule,
                                         const std::optional<SegmentationModel> &model = std::nullopt);

    SvEstimate estimate_sv_params(std::span<const Cir> scans, const ClusterRule &rule = {});
}

#endif
