# SPDX-License-Identifier: Apache-2.0
#
# uavsv: UWB air-to-ground channel modelling toolkit
# Copyright (C) 2026 The uavsv authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import math

import pytest

import uavsv

KEY = uavsv.ScenarioKey(uavsv.Scenario.HoverOpen, uavsv.Receiver.RX1, uavsv.Orientation.VV, 15)


def test_catalog_row():
    p = uavsv.catalog_lookup(KEY)
    assert p.chi == pytest.approx(0.033)
    assert p.gamma == pytest.approx(8.7)
    assert uavsv.describe(KEY) == "HoverOpen,RX1,VV,15"
    assert uavsv.parse_scenario_key("HoverOpen,RX1,VV,15") == KEY


def test_path_loss():
    assert uavsv.fspl_ref_db() == pytest.approx(44.3797, abs=1e-4)
    r = uavsv.path_loss(uavsv.Scenario.HoverOpen, uavsv.Receiver.RX1, uavsv.Orientation.VV, 15, 10)
    assert r.total_db == pytest.approx(71.0956, abs=1e-4)
    vh = uavsv.path_loss(uavsv.Scenario.HoverOpen, uavsv.Receiver.RX1, uavsv.Orientation.VH, 15, 10)
    assert vh.total_db - r.total_db == pytest.approx(12.9)
    root = math.sqrt(35.0)
    assert uavsv.fresnel_gamma_v(math.pi / 2) == pytest.approx((root - 1) / (root + 1))


def test_synthesis_is_thread_invariant():
    p = uavsv.catalog_lookup(KEY)
    a = uavsv.synthesize_ensemble(p, 16, 5, threads=1)
    b = uavsv.synthesize_ensemble(p, 16, 5, threads=4)
    assert len(a) == 16
    for x, y in zip(a, b):
        assert [(t.delay_ns, t.amplitude) for t in x.taps] == [(t.delay_ns, t.amplitude) for t in y.taps]
    assert a[3].scan_index == 3
    assert a[0].taps[0].delay_ns == 0.0


def test_analysis_chain():
    p = uavsv.catalog_lookup(KEY)
    scans = uavsv.synthesize_ensemble(p, 50, 7)
    pdp = uavsv.compute_pdp(scans)
    assert len(pdp.power) == 1668
    clusters = uavsv.detect_clusters(pdp)
    assert clusters.clusters[0].start_ns == 0.0
    fit = uavsv.fit_sv_piecewise(pdp, clusters)
    assert fit.mean_abs_residual_sv <= fit.mean_abs_residual_single


def test_channel_metrics():
    cir = uavsv.Cir()
    cir.taps = [uavsv.Tap(0.0, 1.0), uavsv.Tap(10.0, 1.0)]
    assert uavsv.rms_delay_spread(cir) == 5.0
    cir.taps = [uavsv.Tap(0.0, 1.0), uavsv.Tap(4.0, math.sqrt(0.3)), uavsv.Tap(9.0, math.sqrt(0.2))]
    assert uavsv.ricean_k_factor(cir) == pytest.approx(3.0103, abs=1e-4)
    assert uavsv.channel_stats(cir).n_significant_mpcs == 3


def test_clean():
    pulse = [0.1, 0.6, 1.0, -0.2, -0.8, -0.3]
    raw = pulse + [0.0] * 14
    out = uavsv.clean_deconvolve(raw, pulse, 0.5)
    assert len(out.taps) == 1
    assert out.taps[0].amplitude == pytest.approx(1.0)


def test_estimate_and_file_roundtrip():
    p = uavsv.catalog_lookup(KEY)
    scans = uavsv.synthesize_ensemble(p, 300, 11, key=KEY)
    est = uavsv.estimate_sv_params(scans)
    assert est.n_scans == 300
    assert est.params.gamma == pytest.approx(8.7, rel=0.2)

    text = uavsv.format_cir_file(scans, 11, KEY)
    back = uavsv.parse_cir_file(text)
    assert len(back) == 300
    assert uavsv.format_cir_file(back, 11, KEY) == text


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        uavsv.parse_cir_file("not a cir file")
    with pytest.raises(ValueError):
        uavsv.synthesize_ensemble(uavsv.catalog_lookup(KEY), 0, 1)
