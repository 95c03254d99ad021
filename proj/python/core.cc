// Copyright 2026 The kerrqnd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kerrqnd/commands.h"
#include "kerrqnd/concentration.h"
#include "kerrqnd/kerr_params.h"
#include "kerrqnd/purification.h"
#include "kerrqnd/qnd_readout.h"

namespace py = pybind11;
using namespace kerrqnd;

namespace {

ReadoutConfig make_readout(double chi, double kappa1, double g_mag, double tau, bool noise) {
    ReadoutConfig cfg;
    cfg.chi = chi;
    cfg.kappa1 = kappa1;
    cfg.g_mag = g_mag;
    cfg.tau = tau;
    cfg.noise_enabled = noise;
    cfg.validate();
    return cfg;
}

CircuitParams make_circuit(double g1, double g2, double delta, double omega_c, double kappa1, double kappa2) {
    CircuitParams p;
    p.g1_hz = g1;
    p.g2_hz = g2;
    p.delta_big_hz = delta;
    p.omega_c_hz = omega_c;
    p.kappa1_hz = kappa1;
    p.kappa2_hz = kappa2;
    p.validate();
    return p;
}

// Runs a CLI subcommand in-process; returns (exit code, JSON text, error).
py::tuple run(const std::string &command, const std::map<std::string, std::string> &config,
              std::optional<std::uint64_t> seed, std::optional<std::int64_t> trials, bool noise) {
    KeyValueConfig cfg;
    for (const auto &[k, v] : config) {
        cfg.set(k, v, "python");
    }
    RunOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.noise = noise;
    CommandResult r;
    {
        py::gil_scoped_release release;
        r = run_command(command, cfg, opts);
    }
    std::string doc = r.document.is_null() ? "" : r.document.dump();
    return py::make_tuple(r.exit_code, doc, r.error);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cross-Kerr QND readout, entanglement concentration and purification.";
    m.attr("__version__") = library_version();

    py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);

    m.def("effective_chi_hz", [](double g1, double g2, double delta, double omega_c) {
        return effective_chi_hz(make_circuit(g1, g2, delta, omega_c, 1, 1));
    }, py::arg("g1_hz"), py::arg("g2_hz"), py::arg("delta_hz"), py::arg("omega_c_hz"));

    m.def("measurement_window", [](double g1, double g2, double delta, double omega_c, double kappa1, double kappa2,
                                   double g_mag) {
        auto w = measurement_window(make_circuit(g1, g2, delta, omega_c, kappa1, kappa2), g_mag);
        return py::make_tuple(w.tau_min_s, w.tau_max_s);
    }, py::arg("g1_hz"), py::arg("g2_hz"), py::arg("delta_hz"), py::arg("omega_c_hz"), py::arg("kappa1_hz"),
          py::arg("kappa2_hz"), py::arg("g_mag"), "(tau_min, tau_max) in seconds");

    m.def("squeezed_pair_entropy", [](double r) { return squeezed_pair_entropy(SqueezedParams::from_r(r)); },
          py::arg("r"));
    m.def("p_m", [](double r, int m) { return p_m(SqueezedParams::from_r(r), m); }, py::arg("r"), py::arg("m"));
    m.def("entanglement_threshold", [](double r) { return entanglement_threshold(SqueezedParams::from_r(r)); },
          py::arg("r"));
    m.def("smallest_improving_m", [](double r) { return smallest_improving_m(SqueezedParams::from_r(r)); },
          py::arg("r"));
    m.def("success_probability", [](double r, double tail_tol) {
        auto sp = SqueezedParams::from_r(r);
        return success_probability(sp, outcome_cutoff(sp, tail_tol));
    }, py::arg("r"), py::arg("tail_tol") = 1e-12);

    m.def("collapsed_entropy", [](double r, int m, int n_max) {
        return entanglement_entropy(collapsed_state(SqueezedParams::from_r(r), m, n_max), alice_bob_cut());
    }, py::arg("r"), py::arg("m"), py::arg("n_max"), "Schmidt entropy after Bob's outcome m.");

    m.def("cascade_steady_output", [](int n1, int n2, double chi, double kappa1, double g_mag) {
        return cascade_steady_output(n1, n2, make_readout(chi, kappa1, g_mag, 1, false));
    }, py::arg("n1"), py::arg("n2"), py::arg("chi"), py::arg("kappa1"), py::arg("g_mag"));
    m.def("simulate_cascade_ode", [](int n1, int n2, double chi, double kappa1, double g_mag, double t_end,
                                     double dt) {
        return simulate_cascade_ode(n1, n2, make_readout(chi, kappa1, g_mag, 1, false), t_end, dt);
    }, py::arg("n1"), py::arg("n2"), py::arg("chi"), py::arg("kappa1"), py::arg("g_mag"), py::arg("t_end"),
          py::arg("dt") = kDefaultStepKappa);
    m.def("misidentification_prob", [](double chi, double kappa1, double g_mag, double tau) {
        return misidentification_prob(make_readout(chi, kappa1, g_mag, tau, true));
    }, py::arg("chi"), py::arg("kappa1"), py::arg("g_mag"), py::arg("tau"));

    m.def("p_no_closed_form", [](double r, double eta_a, double eta_b, double t_tx) {
        ChannelParams ch{eta_a, eta_b, t_tx};
        ch.validate();
        return p_no_closed_form(SqueezedParams::from_r(r), ch);
    }, py::arg("r"), py::arg("eta_a"), py::arg("eta_b"), py::arg("t_tx"));

    m.def("run", &run, py::arg("command"), py::arg("config"), py::arg("seed") = py::none(),
          py::arg("trials") = py::none(), py::arg("noise") = true);
}
