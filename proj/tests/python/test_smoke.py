# Copyright 2026 The kerrqnd Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import kerrqnd


def test_version():
    assert kerrqnd.__version__ == "0.1.0"


def test_chi_and_window():
    chi = kerrqnd.effective_chi_hz(300e6, 300e6, 1.5e9, 1.5e9)
    assert chi == pytest.approx(-2.4e6, rel=1e-12)
    tau_min, tau_max = kerrqnd.measurement_window(300e6, 300e6, 1.5e9, 1.5e9, 100e6, 20e3, 50)
    assert tau_min == pytest.approx(1.72694165681310e-11, rel=1e-12)
    assert tau_max == pytest.approx(7.95774715459477e-06, rel=1e-12)


def test_concentration_closed_forms():
    assert kerrqnd.squeezed_pair_entropy(0.9) == pytest.approx(1.42283862908027, abs=1e-12)
    assert kerrqnd.entanglement_threshold(0.9) == pytest.approx(3.14888087450003, abs=1e-11)
    assert kerrqnd.smallest_improving_m(0.9) == 4
    assert kerrqnd.success_probability(0.9) == pytest.approx(0.204281039158977, abs=1e-11)
    total = sum(kerrqnd.p_m(0.9, m) for m in range(200))
    assert total == pytest.approx(1.0, abs=1e-12)
    assert kerrqnd.collapsed_entropy(0.9, 4, 6) == pytest.approx(math.log(5), abs=1e-9)


def test_readout():
    exact = kerrqnd.cascade_steady_output(1, 2, 0.024, 1.0, 50)
    assert exact.real == pytest.approx(14.17010431505668, abs=1e-10)
    ode = kerrqnd.simulate_cascade_ode(1, 2, 0.024, 1.0, 50, 100.0)
    assert abs(ode - exact) / abs(exact) < 1e-6
    tau_min = 1.0 / (64 * 50**2 * 0.024**2)
    assert kerrqnd.misidentification_prob(0.024, 1.0, 50, tau_min) == pytest.approx(0.617075077451974)


def test_purification_closed_form():
    assert kerrqnd.p_no_closed_form(0.9, 5000, 5000, 1e-6) == pytest.approx(0.979355537214864, abs=1e-13)


def test_run_concentrate_reproducible():
    a = kerrqnd.run("concentrate", {"r": 0.9}, seed=3, trials=2000)
    b = kerrqnd.run("concentrate", {"r": 0.9}, seed=3, trials=2000)
    assert a == b
    assert a["meta"]["seed"] == 3
    assert a["results"]["smallest_improving_m"] == 4


def test_run_errors():
    with pytest.raises(kerrqnd.CommandFailed) as info:
        kerrqnd.run("qnd-verify", {"chi": 0.3})
    assert info.value.exit_code == 2
    with pytest.raises(kerrqnd.CommandFailed) as info:
        kerrqnd.run("concentrate", {})
    assert info.value.exit_code == 1
    with pytest.raises(ValueError):
        kerrqnd.p_m(-1.0, 0)
