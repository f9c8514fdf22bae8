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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace uavsv;

namespace
{
    void bind_enums(py::module_ &m)
    {
        py::enum_<Scenario>(m, "Scenario")
            .value("HoverOpen", Scenario::HoverOpen)
            .value("HoverFoliage", Scenario::HoverFoliage)
            .value("MovingOpen", Scenario::MovingOpen);
        py::enum_<Receiver>(m, "Receiver").value("RX1", Receiver::RX1).value("RX2", Receiver::RX2);
        py::enum_<Orientation>(m, "Orientation").value("VV", Orientation::VV).value("VH", Orientation::VH);
        py::enum_<AmplitudeModel>(m, "AmplitudeModel")
            .value("Rayleigh", AmplitudeModel::Rayleigh)
            .value("Deterministic", AmplitudeModel::Deterministic);
    }

    void bind_config(py::module_ &m)
    {
        py::class_<ScenarioKey>(m, "ScenarioKey")
            .def(py::init<>())
            .def(py::init([](Scenario s, Receiver r, Orientation o, int x) { return ScenarioKey{s, r, o, x}; }),
                 py::arg("scenario"), py::arg("rx"), py::arg("orientation"), py::arg("x_m") = 15)
            .def_readwrite("scenario", &ScenarioKey::scenario)
            .def_readwrite("rx", &ScenarioKey::rx)
            .def_readwrite("orientation", &ScenarioKey::orientation)
            .def_readwrite("x_m", &ScenarioKey::x_m)
            .def("__eq__", [](const ScenarioKey &a, const ScenarioKey &b) { return a == b; })
            .def("__repr__", [](const ScenarioKey &k) { return "ScenarioKey(" + describe(k) + ")"; });

        py::class_<SVParams>(m, "SVParams")
            .def(py::init<>())
            .def_readwrite("n_c_mean", &SVParams::n_c_mean)
            .def_readwrite("chi", &SVParams::chi)
            .def_readwrite("varsigma", &SVParams::varsigma)
            .def_readwrite("eta", &SVParams::eta)
            .def_readwrite("gamma", &SVParams::gamma)
            .def_readwrite("omega00", &SVParams::omega00)
            .def("validate", &SVParams::validate);

        py::class_<RfConfig>(m, "RfConfig")
            .def(py::init<>())
            .def_readwrite("center_frequency_hz", &RfConfig::center_frequency_hz)
            .def_readwrite("reference_distance_m", &RfConfig::reference_distance_m)
            .def_readwrite("epsilon_r", &RfConfig::epsilon_r)
            .def_readwrite("g_r_circular", &RfConfig::g_r_circular)
            .def_readwrite("dynamic_range_db", &RfConfig::dynamic_range_db)
            .def_readwrite("harmonize_gains", &RfConfig::harmonize_gains);

        py::class_<AntennaModel>(m, "AntennaModel")
            .def(py::init<>())
            .def_readwrite("gain_exponent", &AntennaModel::gain_exponent)
            .def_readwrite("max_gain", &AntennaModel::max_gain);

        py::class_<SynthesisOptions>(m, "SynthesisOptions")
            .def(py::init<>())
            .def_readwrite("amplitude", &SynthesisOptions::amplitude)
            .def_readwrite("decay_as_time_constant", &SynthesisOptions::decay_as_time_constant)
            .def_readwrite("window_ns", &SynthesisOptions::window_ns)
            .def_readwrite("sample_spacing_ns", &SynthesisOptions::sample_spacing_ns);

        py::class_<ClusterRule>(m, "ClusterRule")
            .def(py::init<>())
            .def_readwrite("min_duration_ns", &ClusterRule::min_duration_ns)
            .def_readwrite("min_drop_db", &ClusterRule::min_drop_db)
            .def_readwrite("dynamic_range_db", &ClusterRule::dynamic_range_db);
    }

    void bind_results(py::module_ &m)
    {
        py::class_<Tap>(m, "Tap")
            .def(py::init([](double d, std::complex<double> a) { return Tap{d, a}; }), py::arg("delay_ns"),
                 py::arg("amplitude"))
            .def_readwrite("delay_ns", &Tap::delay_ns)
            .def_readwrite("amplitude", &Tap::amplitude);

        py::class_<Cir>(m, "Cir")
            .def(py::init<>())
            .def_readwrite("taps", &Cir::taps)
            .def_readwrite("sample_spacing_ns", &Cir::sample_spacing_ns)
            .def_readwrite("window_ns", &Cir::window_ns)
            .def_property_readonly("scan_index",
                                   [](const Cir &c) -> std::optional<std::uint64_t>
                                   {
                                       if (c.meta)
                                           return c.meta->scan_index;
                                       return std::nullopt;
                                   });

        py::class_<Pdp>(m, "Pdp")
            .def_property_readonly("delay_ns",
                                   [](const Pdp &p)
                                   {
                                       std::vector<double> v;
                                       for (const auto &b : p.bins)
                                           v.push_back(b.delay_ns);
                                       return v;
                                   })
            .def_property_readonly("power",
                                   [](const Pdp &p)
                                   {
                                       std::vector<double> v;
                                       for (const auto &b : p.bins)
                                           v.push_back(b.power);
                                       return v;
                                   })
            .def_readonly("n_scans", &Pdp::n_scans)
            .def("peak_power", &Pdp::peak_power);

        py::class_<Cluster>(m, "Cluster")
            .def_readonly("start_ns", &Cluster::start_ns)
            .def_readonly("end_ns", &Cluster::end_ns)
            .def_readonly("peak_power_db", &Cluster::peak_power_db)
            .def_readonly("lead_delay_ns", &Cluster::lead_delay_ns);

        py::class_<ClusterSet>(m, "ClusterSet").def_readonly("clusters", &ClusterSet::clusters);

        py::class_<FitReport>(m, "FitReport")
            .def_readonly("mean_abs_residual_sv", &FitReport::mean_abs_residual_sv)
            .def_readonly("mean_abs_residual_single", &FitReport::mean_abs_residual_single)
            .def_readonly("n_points", &FitReport::n_points);

        py::class_<ChannelStats>(m, "ChannelStats")
            .def_readonly("rms_ds_ns", &ChannelStats::rms_ds_ns)
            .def_readonly("k_factor_db", &ChannelStats::k_factor_db)
            .def_readonly("n_significant_mpcs", &ChannelStats::n_significant_mpcs);

        py::class_<SvEstimate>(m, "SvEstimate")
            .def_readonly("params", &SvEstimate::params)
            .def_readonly("n_scans", &SvEstimate::n_scans)
            .def_readonly("n_clusters", &SvEstimate::n_clusters)
            .def_readonly("warnings", &SvEstimate::warnings);

        py::class_<PathLossResult>(m, "PathLossResult")
            .def_readonly("model", &PathLossResult::model)
            .def_readonly("total_db", &PathLossResult::total_db)
            .def_readonly("penalty_db", &PathLossResult::penalty_db)
            .def_readonly("gamma_v", &PathLossResult::gamma_v)
            .def_readonly("clamped", &PathLossResult::clamped);
    }

    // Path loss for one catalog link, VH adding the measured mismatch.
    PathLossResult path_loss(Scenario s, Receiver rx, Orientation o, double x, double h, const RfConfig &rf,
                             const AntennaModel &ant)
    {
        const LinkGeometry g{x, h, receiver_height_m(rx)};
        PathLossResult r;
        switch (s)
        {
        case Scenario::HoverFoliage:
            return pl_foliage(rf);
        case Scenario::HoverOpen:
            r = rx == Receiver::RX1 ? pl_hover_rx1_vv(g, ant, rf) : pl_hover_rx2_vv(g, ant, rf);
            break;
        case Scenario::MovingOpen:
            r = rx == Receiver::RX1 ? pl_move_rx1_vv(g, ant, rf) : pl_move_rx2_vv(g, ant, rf);
            break;
        }
        if (o == Orientation::VV)
            return r;
        return pl_vh(r, {o, c_pol_lookup(s, rx, x, h)});
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "UWB air-to-ground channel modelling toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    bind_enums(m);
    bind_config(m);
    bind_results(m);

    m.def("catalog_lookup", &catalog_lookup, py::arg("key"));
    m.def("describe", &describe, py::arg("key"));
    m.def("parse_scenario_key", &parse_scenario_key, py::arg("descriptor"));

    m.def("fspl_ref_db", &fspl_ref_db, py::arg("rf") = RfConfig{});
    m.def("fresnel_gamma_v", &fresnel_gamma_v, py::arg("psi"), py::arg("epsilon_r") = 35.0);
    m.def("path_loss", &path_loss, py::arg("scenario"), py::arg("rx"), py::arg("orientation"), py::arg("x_m"),
          py::arg("h_m"), py::arg("rf") = RfConfig{}, py::arg("antenna") = AntennaModel{});

    m.def("synthesize_ensemble", &synthesize_ensemble, py::arg("params"), py::arg("n_scans"), py::arg("seed"),
          py::arg("options") = SynthesisOptions{}, py::arg("threads") = 1u,
          py::arg("key") = std::optional<ScenarioKey>{}, py::call_guard<py::gil_scoped_release>());

    m.def("compute_pdp", [](const std::vector<Cir> &scans) { return compute_pdp(scans); }, py::arg("scans"));
    m.def("detect_clusters", &detect_clusters, py::arg("pdp"), py::arg("rule") = ClusterRule{});
    m.def("fit_sv_piecewise", &fit_sv_piecewise, py::arg("pdp"), py::arg("clusters"));
    m.def("rms_delay_spread", py::overload_cast<const Cir &>(&rms_delay_spread), py::arg("cir"));
    m.def("ricean_k_factor", py::overload_cast<const Cir &>(&ricean_k_factor), py::arg("cir"));
    m.def("count_significant_mpcs", py::overload_cast<const Cir &, double>(&count_significant_mpcs),
          py::arg("cir"), py::arg("threshold_fraction") = kDefaultMpcThreshold);
    m.def("channel_stats", py::overload_cast<const Cir &, double>(&channel_stats), py::arg("cir"),
          py::arg("threshold_fraction") = kDefaultMpcThreshold);
    m.def(
        "clean_deconvolve",
        [](const std::vector<double> &raw, const std::vector<double> &pulse, double spacing, double stop_fraction)
        { return clean_deconvolve(raw, pulse, spacing, {stop_fraction, 1000}).cir; },
        py::arg("raw"), py::arg("pulse"), py::arg("sample_spacing_ns"), py::arg("stop_fraction") = 0.2);
    m.def(
        "estimate_sv_params", [](const std::vector<Cir> &scans, const ClusterRule &rule)
        { return estimate_sv_params(scans, rule); },
        py::arg("scans"), py::arg("rule") = ClusterRule{}, py::call_guard<py::gil_scoped_release>());

    m.def(
        "format_cir_file", [](const std::vector<Cir> &scans, std::uint64_t seed, std::optional<ScenarioKey> key)
        { return format_cir_file(make_cir_file(scans, seed, key)); },
        py::arg("scans"), py::arg("seed"), py::arg("key") = std::optional<ScenarioKey>{});
    m.def(
        "parse_cir_file", [](const std::string &text) { return parse_cir_file(text).scans; }, py::arg("text"));
}
