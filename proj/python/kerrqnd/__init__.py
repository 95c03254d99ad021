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

"""Cross-Kerr QND readout, entanglement concentration and purification."""

import json

from ._core import (
    RegimeError,
    __version__,
    cascade_steady_output,
    collapsed_entropy,
    effective_chi_hz,
    entanglement_threshold,
    measurement_window,
    misidentification_prob,
    p_m,
    p_no_closed_form,
    simulate_cascade_ode,
    smallest_improving_m,
    squeezed_pair_entropy,
    success_probability,
)
from . import _core


class CommandFailed(RuntimeError):
    def __init__(self, exit_code, message):
        super().__init__(f"exit {exit_code}: {message}")
        self.exit_code = exit_code


def run(command, config=None, *, seed=None, trials=None, noise=True):
    """Runs a CLI subcommand in-process and returns its JSON document as a dict.

    `config` maps keys to values exactly as in a key = value file.
    Raises CommandFailed on a nonzero exit code.
    """
    cfg = {str(k): str(v) for k, v in (config or {}).items()}
    code, doc, error = _core.run(command, cfg, seed, trials, noise)
    if code != 0:
        raise CommandFailed(code, error)
    return json.loads(doc)


__all__ = [
    "CommandFailed",
    "RegimeError",
    "cascade_steady_output",
    "collapsed_entropy",
    "effective_chi_hz",
    "entanglement_threshold",
    "measurement_window",
    "misidentification_prob",
    "p_m",
    "p_no_closed_form",
    "run",
    "simulate_cascade_ode",
    "smallest_improving_m",
    "squeezed_pair_entropy",
    "success_probability",
]
