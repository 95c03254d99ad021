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

#include "kerrqnd/kerr_params.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kerrqnd {

namespace {

void require_finite(double v, const char *name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

void require_nonnegative(double v, const char *name) {
    require_finite(v, name);
    if (v < 0) {
        throw std::invalid_argument(std::string(name) + " must be nonnegative");
    }
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

void CircuitParams::validate() const {
    require_nonnegative(g1_hz, "g1");
    require_nonnegative(g2_hz, "g2");
    require_finite(delta_big_hz, "delta_big");
    require_finite(delta_small_hz, "delta_small");
    require_nonnegative(omega_c_hz, "omega_c");
    require_nonnegative(kappa1_hz, "kappa1");
    require_nonnegative(kappa2_hz, "kappa2");
    if (delta_big_hz == 0) {
        throw std::invalid_argument("delta_big must be nonzero");
    }
}

void ImperfectionParams::validate() const {
    require_nonnegative(phase_instability_rad, "phase_instability");
    require_nonnegative(kappa_r1_hz, "kappa_r1");
    require_nonnegative(kappa_r2_hz, "kappa_r2");
    require_finite(chi1_hz, "chi1");
    require_finite(chi2_hz, "chi2");
    require_nonnegative(gamma1_hz, "gamma1");
    require_nonnegative(gamma2_hz, "gamma2");
    require_nonnegative(n_b1, "n_b1");
    require_nonnegative(n_b2, "n_b2");
}

const char *to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::kPass:
            return "pass";
        case CheckStatus::kFail:
            return "fail";
        case CheckStatus::kNotEvaluable:
            return "not_evaluable";
    }
    return "unknown";
}

bool FeasibilityReport::all_passed() const {
    for (const auto &c : checks) {
        if (c.status == CheckStatus::kFail) {
            return false;
        }
    }
    return true;
}

const FeasibilityCheck &FeasibilityReport::check(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::out_of_range("no feasibility check named '" + name + "'");
}

FeasibilityCheck make_check(std::string name, double ratio, double bound) {
    FeasibilityCheck c{std::move(name), ratio, bound, CheckStatus::kNotEvaluable};
    if (std::isfinite(ratio) && std::isfinite(bound)) {
        c.status = ratio < bound ? CheckStatus::kPass : CheckStatus::kFail;
    }
    return c;
}

double effective_chi_hz(const CircuitParams &p) {
    if (p.delta_big_hz == 0 || p.omega_c_hz == 0) {
        throw std::domain_error("effective_chi: Delta and Omega_c must be nonzero");
    }
    // The 2pi factors cancel down to a single one, so the cyclic expression
    // directly yields chi/2pi.
    double g1sq = p.g1_hz * p.g1_hz;
    double g2sq = p.g2_hz * p.g2_hz;
    return -(g1sq * g2sq) / (p.delta_big_hz * p.omega_c_hz * p.omega_c_hz);
}

FeasibilityReport validate_regime(const CircuitParams &p, double threshold) {
    FeasibilityReport report;
    bool chi_defined = p.delta_big_hz != 0 && p.omega_c_hz != 0;
    report.chi_hz = chi_defined ? effective_chi_hz(p) : kNaN;

    double g1_ratio = p.omega_c_hz != 0 ? p.g1_hz / p.omega_c_hz : kNaN;
    double g2_ratio = p.delta_big_hz != 0 ? std::abs(p.g2_hz / p.delta_big_hz) : kNaN;
    double chi_ratio = chi_defined && p.kappa1_hz > 0 ? std::abs(report.chi_hz) / p.kappa1_hz : kNaN;

    report.checks.push_back(make_check("g1_over_omega_c_squared", g1_ratio * g1_ratio, threshold));
    report.checks.push_back(make_check("g2_over_delta", g2_ratio, threshold));
    report.checks.push_back(make_check("chi_over_kappa1", chi_ratio, threshold));
    return report;
}

MeasurementWindow measurement_window(const CircuitParams &p, double g_mag) {
    if (!(g_mag > 0)) {
        throw std::invalid_argument("measurement_window: |g| must be positive");
    }
    if (!(p.kappa2_hz > 0)) {
        throw std::invalid_argument("measurement_window: kappa2 must be positive");
    }
    double chi = to_angular(effective_chi_hz(p));
    if (chi == 0) {
        throw std::domain_error("measurement_window: chi = 0 gives an unbounded lower limit");
    }
    double kappa1 = to_angular(p.kappa1_hz);
    double kappa2 = to_angular(p.kappa2_hz);
    return MeasurementWindow{kappa1 / (64.0 * g_mag * g_mag * chi * chi), 1.0 / kappa2};
}

FeasibilityReport check_imperfections(const CircuitParams &p, const ImperfectionParams &imp) {
    FeasibilityReport report;
    bool chi_defined = p.delta_big_hz != 0 && p.omega_c_hz != 0;
    report.chi_hz = chi_defined ? effective_chi_hz(p) : kNaN;

    double phase_bound = chi_defined && p.kappa1_hz > 0 ? 4.0 * std::abs(report.chi_hz) / p.kappa1_hz : kNaN;
    report.checks.push_back(make_check("phase_instability", std::abs(imp.phase_instability_rad), phase_bound));

    double mismatch = kNaN;
    if (imp.chi1_hz != 0 && imp.kappa_r2_hz != 0) {
        mismatch = std::abs(imp.chi2_hz * imp.kappa_r1_hz / (imp.chi1_hz * imp.kappa_r2_hz) - 1.0);
    }
    double mismatch_bound = imp.n_b2 > 0 ? 1.0 / imp.n_b2 : kNaN;
    report.checks.push_back(make_check("cavity_mismatch", mismatch, mismatch_bound));

    auto loss_bound = [&](double n_b) { return n_b > 0 ? p.kappa1_hz / (n_b * n_b) : kNaN; };
    report.checks.push_back(make_check("loss_1", imp.gamma1_hz, loss_bound(imp.n_b1)));
    report.checks.push_back(make_check("loss_2", imp.gamma2_hz, loss_bound(imp.n_b2)));
    return report;
}

}  // namespace kerrqnd
