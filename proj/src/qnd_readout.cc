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

#include "kerrqnd/qnd_readout.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace kerrqnd {

using cplx = std::complex<double>;

namespace {

constexpr cplx kI{0.0, 1.0};

cplx drive(const ReadoutConfig &cfg) { return kI * cfg.g_mag; }

void require_sector(int n1, int n2) {
    if (n1 < 0 || n2 < 0) {
        throw std::invalid_argument("photon numbers must be nonnegative");
    }
}

}  // namespace

void ReadoutConfig::validate() const {
    if (!(kappa1 > 0) || !std::isfinite(kappa1)) {
        throw std::invalid_argument("readout: kappa1 must be positive");
    }
    if (!(tau > 0) || !std::isfinite(tau)) {
        throw std::invalid_argument("readout: tau must be positive");
    }
    if (!(g_mag >= 0) || !std::isfinite(g_mag)) {
        throw std::invalid_argument("readout: |g| must be nonnegative");
    }
    if (!std::isfinite(chi) || !(std::abs(chi) / kappa1 < 1.0)) {
        throw std::invalid_argument("readout: |chi|/kappa1 must be below 1");
    }
}

ReadoutConfig ReadoutConfig::from_circuit(const CircuitParams &p, double g_mag, double tau_s, bool noise) {
    ReadoutConfig cfg;
    cfg.chi = to_angular(effective_chi_hz(p));
    cfg.kappa1 = to_angular(p.kappa1_hz);
    cfg.g_mag = g_mag;
    cfg.tau = tau_s;
    cfg.noise_enabled = noise;
    return cfg;
}

bool adiabatic_regime_ok(const ReadoutConfig &cfg, double threshold) {
    return std::abs(cfg.chi) / cfg.kappa1 < threshold;
}

double per_photon_step(const ReadoutConfig &cfg) {
    return 4.0 * std::sqrt(2.0) * cfg.g_mag * cfg.chi / std::sqrt(cfg.kappa1);
}

double expected_signal(int n_total, const ReadoutConfig &cfg) {
    if (n_total < 0) {
        throw std::invalid_argument("expected_signal: n_total must be nonnegative");
    }
    return per_photon_step(cfg) * n_total;
}

cplx cascade_steady_output(int n1, int n2, const ReadoutConfig &cfg) {
    require_sector(n1, n2);
    double half = cfg.kappa1 / 2.0;
    auto reflect = [&](int n) {
        cplx shift = kI * (cfg.chi * n);
        return (shift - half) / (shift + half);
    };
    return drive(cfg) * std::sqrt(cfg.kappa1) * reflect(n1) * reflect(n2);
}

cplx first_order_output(int n1, int n2, const ReadoutConfig &cfg) {
    require_sector(n1, n2);
    cplx g = drive(cfg);
    double root = std::sqrt(cfg.kappa1);
    return -4.0 * kI * g * cfg.chi * static_cast<double>(n1 + n2) / root + g * root;
}

double first_order_relative_deviation(int n1, int n2, const ReadoutConfig &cfg) {
    double signal = expected_signal(n1 + n2, cfg);
    if (signal == 0) {
        return 0;
    }
    double exact = std::sqrt(2.0) * cascade_steady_output(n1, n2, cfg).real();
    return std::abs(exact - signal) / std::abs(signal);
}

double first_order_deviation_bound(int n_total, const ReadoutConfig &cfg) {
    double phi = 4.0 * std::abs(cfg.chi) * n_total / cfg.kappa1;
    return phi * phi / 4.0;
}

cplx simulate_cascade_ode(int n1, int n2, const ReadoutConfig &cfg, double t_end, double dt) {
    require_sector(n1, n2);
    if (!(dt > 0) || !(dt * cfg.kappa1 < kMaxStepKappa)) {
        throw std::invalid_argument("simulate_cascade_ode: step must satisfy 0 < dt*kappa1 < 0.1");
    }
    if (!(t_end >= 0)) {
        throw std::invalid_argument("simulate_cascade_ode: t_end must be nonnegative");
    }
    const double root = std::sqrt(cfg.kappa1);
    const cplx input = drive(cfg) * root;
    const cplx rate1 = kI * (cfg.chi * n1) + cfg.kappa1 / 2.0;
    const cplx rate2 = kI * (cfg.chi * n2) + cfg.kappa1 / 2.0;

    using Field = std::array<cplx, 2>;
    auto derivative = [&](const Field &a) {
        cplx out1 = input + root * a[0];
        return Field{-rate1 * a[0] - root * input, -rate2 * a[1] - root * out1};
    };
    auto axpy = [](const Field &a, double h, const Field &k) { return Field{a[0] + h * k[0], a[1] + h * k[1]}; };

    long steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
    double h = steps > 0 ? t_end / static_cast<double>(steps) : 0.0;
    Field a{0.0, 0.0};
    for (long s = 0; s < steps; ++s) {
        Field k1 = derivative(a);
        Field k2 = derivative(axpy(a, h / 2, k1));
        Field k3 = derivative(axpy(a, h / 2, k2));
        Field k4 = derivative(axpy(a, h, k3));
        for (int i = 0; i < 2; ++i) {
            a[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    cplx out1 = input + root * a[0];
    return out1 + root * a[1];
}

double homodyne_noise_variance(const ReadoutConfig &cfg) { return 1.0 / (2.0 * cfg.tau); }

int decode_photon_number(double x_value, double step) {
    if (step == 0 || !std::isfinite(step)) {
        throw std::invalid_argument("decode: per-photon step must be nonzero");
    }
    double estimate = std::round(x_value / step);
    if (!(estimate > 0)) {
        return 0;
    }
    return static_cast<int>(std::min(estimate, 1e9));
}

HomodyneOutcome sample_homodyne(int n_total, const ReadoutConfig &cfg, Rng &rng) {
    HomodyneOutcome out;
    out.per_photon_step = per_photon_step(cfg);
    if (out.per_photon_step == 0) {
        throw std::invalid_argument("sample_homodyne: zero per-photon step cannot be decoded");
    }
    out.x_value = expected_signal(n_total, cfg);
    if (cfg.noise_enabled) {
        std::normal_distribution<double> noise(0.0, std::sqrt(homodyne_noise_variance(cfg)));
        out.x_value += noise(rng);
    }
    out.decoded_m = decode_photon_number(out.x_value, out.per_photon_step);
    return out;
}

double misidentification_prob(const ReadoutConfig &cfg) {
    double step = std::abs(per_photon_step(cfg));
    if (step == 0) {
        return 1.0;
    }
    if (!cfg.noise_enabled) {
        return 0.0;
    }
    double sigma = std::sqrt(homodyne_noise_variance(cfg));
    return std::erfc(step / (2.0 * std::sqrt(2.0) * sigma));
}

}  // namespace kerrqnd
