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
#include <stdexcept>

namespace uavsv
{
    namespace
    {
        struct PowerSample
        {
            double delay_ns;
            double power;
        };

        std::vector<PowerSample> samples_of(const Cir &cir)
        {
            std::vector<PowerSample> out;
            out.reserve(cir.taps.size());
            for (const auto &t : cir.taps)
                out.push_back({t.delay_ns, std::norm(t.amplitude)});
            return out;
        }

        std::vector<PowerSample> samples_of(const Pdp &pdp)
        {
            std::vector<PowerSample> out;
            out.reserve(pdp.bins.size());
            for (const auto &b : pdp.bins)
            {
                if (b.power < 0.0)
                    throw std::invalid_argument("PDP powers cannot be negative.");
                out.push_back({b.delay_ns, b.power});
            }
            return out;
        }

        double rms_of(const std::vector<PowerSample> &s)
        {
            double p = 0.0, m1 = 0.0;
            for (const auto &x : s)
            {
                p += x.power;
                m1 += x.power * x.delay_ns;
            }
            if (!(p > 0.0))
                throw std::invalid_argument("RMS delay spread needs positive total power.");
            m1 /= p;
            // Central second moment avoids cancellation for late, narrow profiles
            double var = 0.0;
            for (const auto &x : s)
                var += x.power * (x.delay_ns - m1) * (x.delay_ns - m1);
            return std::sqrt(std::max(0.0, var / p));
        }

        double k_of(const std::vector<PowerSample> &s)
        {
            double max_p = 0.0;
            for (const auto &x : s)
                max_p = std::max(max_p, x.power);
            if (!(max_p > 0.0))
                throw std::invalid_argument("K-factor needs a tap with positive power.");

            std::size_t los = 0;
            while (!(s[los].power >= 0.5 * max_p))
                ++los;

            double rest = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != los)
                    rest += s[i].power;
            if (!(rest > 0.0))
                return std::numeric_limits<double>::infinity();
            return 10.0 * std::log10(s[los].power / rest);
        }

        std::size_t count_of(const std::vector<PowerSample> &s, double fraction)
        {
            if (!(fraction >= 0.0 && fraction <= 1.0))
                throw std::invalid_argument("Threshold fraction must lie in [0, 1].");
            double max_a = 0.0;
            for (const auto &x : s)
                max_a = std::max(max_a, std::sqrt(x.power));
            const double thr = fraction * max_a;
            return static_cast<std::size_t>(
                std::count_if(s.begin(), s.end(), [&](const PowerSample &x) { return std::sqrt(x.power) >= thr; }));
        }

        bool cross_polarized(const Cir &cir)
        {
            return cir.meta && cir.meta->key && cir.meta->key->orientation == Orientation::VH;
        }
    }

    double rms_delay_spread(const Cir &cir)
    {
        return rms_of(samples_of(cir));
    }

    double rms_delay_spread(const Pdp &pdp)
    {
        return rms_of(samples_of(pdp));
    }

    double ricean_k_factor(const Cir &cir)
    {
        if (cross_polarized(cir))
            throw std::invalid_argument("K-factor is not evaluated for VH orientation.");
        return k_of(samples_of(cir));
    }

    double ricean_k_factor(const Pdp &pdp)
    {
        return k_of(samples_of(pdp));
    }

    std::size_t count_significant_mpcs(const Cir &cir, double threshold_fraction)
    {
        return count_of(samples_of(cir), threshold_fraction);
    }

    std::size_t count_significant_mpcs(const Pdp &pdp, double threshold_fraction)
    {
        auto s = samples_of(pdp);
        std::erase_if(s, [](const PowerSample &x) { return !(x.power > 0.0); });
        return count_of(s, threshold_fraction);
    }

    ChannelStats channel_stats(const Cir &cir, double threshold_fraction)
    {
        ChannelStats st;
        st.threshold_fraction = threshold_fraction;
        st.rms_ds_ns = rms_delay_spread(cir);
        if (!cross_polarized(cir))
            st.k_factor_db = ricean_k_factor(cir);
        st.n_significant_mpcs = count_significant_mpcs(cir, threshold_fraction);
        return st;
    }

    ChannelStats channel_stats(const Pdp &pdp, bool cross_pol, double threshold_fraction)
    {
        ChannelStats st;
        st.threshold_fraction = threshold_fraction;
        st.rms_ds_ns = rms_delay_spread(pdp);
        if (!cross_pol)
            st.k_factor_db = ricean_k_factor(pdp);
        st.n_significant_mpcs = count_significant_mpcs(pdp, threshold_fraction);
        return st;
    }
}
