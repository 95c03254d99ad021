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

#ifndef KERRQND_QND_READOUT_H
#define KERRQND_QND_READOUT_H

#include <complex>
#include <random>

#include "kerrqnd/kerr_params.h"

namespace kerrqnd {

/// Random source used by every stochastic routine.
using Rng = std::mt19937_64;

/// Two identical readout cavities in cascade, probed with g = i|g|.
///
/// chi and kappa1 share one angular unit: rad/s for SI configs, or any unit
/// with kappa1 = 1 for normalized configs. tau is in the reciprocal unit.
struct ReadoutConfig {
    double chi = 0;
    double kappa1 = 1;
    double g_mag = 0;
    double tau = 1;
    bool noise_enabled = true;

    /// Hard invariants: kappa1 > 0, tau > 0, g_mag >= 0, |chi|/kappa1 < 1.
    void validate() const;

    /// SI config from circuit parameters (cyclic Hz inputs).
    static ReadoutConfig from_circuit(const CircuitParams &p, double g_mag, double tau_s, bool noise = true);
};

/// The adiabatic-elimination guard |chi|/kappa1 < threshold.
bool adiabatic_regime_ok(const ReadoutConfig &cfg, double threshold = kMuchLessThreshold);

struct HomodyneOutcome {
    double x_value = 0;
    int decoded_m = 0;
    double per_photon_step = 0;
};

/// Signed homodyne signal change per stored photon, 4 sqrt(2) |g| chi / sqrt(kappa1).
double per_photon_step(const ReadoutConfig &cfg);

/// First-order X quadrature for a total photon number n_total.
double expected_signal(int n_total, const ReadoutConfig &cfg);

/// Exact steady output of the second cavity for sector (n1, n2):
/// g sqrt(k) * prod_i (i chi n_i - k/2) / (i chi n_i + k/2).
std::complex<double> cascade_steady_output(int n1, int n2, const ReadoutConfig &cfg);

/// First-order output g sqrt(k) - 4 i g chi (n1 + n2) / sqrt(k).
std::complex<double> first_order_output(int n1, int n2, const ReadoutConfig &cfg);

/// |sqrt(2) Re(exact) - expected_signal| / |expected_signal|; zero when the
/// signal vanishes.
double first_order_relative_deviation(int n1, int n2, const ReadoutConfig &cfg);

/// Rigorous upper bound phi^2/4, phi = 4 |chi| n_total / kappa1, on
/// first_order_relative_deviation for any split of n_total.
double first_order_deviation_bound(int n_total, const ReadoutConfig &cfg);

/// Default RK4 step, in units of 1/kappa1.
inline constexpr double kDefaultStepKappa = 0.01;
/// Largest accepted dt * kappa1.
inline constexpr double kMaxStepKappa = 0.1;

/// Integrates the cascaded cavity amplitudes for sector (n1, n2) from empty
/// cavities with fixed-step RK4 and returns the output field at t_end.
/// Throws std::invalid_argument when dt * kappa1 >= 0.1 or dt <= 0.
std::complex<double> simulate_cascade_ode(int n1, int n2, const ReadoutConfig &cfg, double t_end, double dt);

/// Variance 1/(2 tau) of the time-averaged vacuum noise on X.
double homodyne_noise_variance(const ReadoutConfig &cfg);

/// Nearest nonnegative integer to x / step, halves away from zero.
int decode_photon_number(double x_value, double step);

/// One noisy (or noiseless) homodyne read of the total photon number.
HomodyneOutcome sample_homodyne(int n_total, const ReadoutConfig &cfg, Rng &rng);

/// Probability that the noise exceeds half a photon step in magnitude.
double misidentification_prob(const ReadoutConfig &cfg);

}  // namespace kerrqnd

#endif
