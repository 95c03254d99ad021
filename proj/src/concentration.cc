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

#include "kerrqnd/concentration.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kerrqnd {

double squeezed_pair_entropy(const SqueezedParams &sp) {
    if (sp.r() == 0) {
        return 0;
    }
    double s2 = sp.mean_photon_number();
    double c2 = 1.0 + s2;
    return c2 * std::log(c2) - s2 * std::log(s2);
}

double p_m(const SqueezedParams &sp, int m) {
    if (m < 0) {
        throw std::invalid_argument("p_m: m must be nonnegative");
    }
    double lambda = sp.lambda();
    double amp = (1.0 - lambda * lambda) * std::pow(lambda, m);
    return amp * amp * (1.0 + m);
}

double outcome_tail_mass(const SqueezedParams &sp, int m_max) {
    // sum_{m > M} (1-x)^2 x^m (1+m) = x^(M+1) ((M+2)(1-x) + x), x = lambda^2
    double x = sp.lambda() * sp.lambda();
    return std::pow(x, m_max + 1) * ((m_max + 2) * (1.0 - x) + x);
}

int outcome_cutoff(const SqueezedParams &sp, double tail_tol) {
    if (!(tail_tol > 0 && tail_tol < 1)) {
        throw std::invalid_argument("outcome_cutoff: tail tolerance must lie in (0, 1)");
    }
    int m = 0;
    while (outcome_tail_mass(sp, m) >= tail_tol) {
        ++m;
    }
    return m;
}

double entanglement_threshold(const SqueezedParams &sp) {
    // x^x / y^y - 1 written through logs so large r does not overflow.
    return std::expm1(squeezed_pair_entropy(sp));
}

int smallest_improving_m(const SqueezedParams &sp) {
    return static_cast<int>(std::floor(entanglement_threshold(sp))) + 1;
}

double success_probability(const SqueezedParams &sp, int n_max) {
    double total = 0;
    for (int m = smallest_improving_m(sp); m <= n_max; ++m) {
        total += p_m(sp, m);
    }
    return total;
}

std::vector<ConcentrationOutcome> run_ideal(const SqueezedParams &sp, int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("run_ideal: n_max must be nonnegative");
    }
    int m_star = smallest_improving_m(sp);
    std::vector<ConcentrationOutcome> outcomes;
    outcomes.reserve(n_max + 1);
    for (int m = 0; m <= n_max; ++m) {
        outcomes.push_back({m, p_m(sp, m), std::log1p(static_cast<double>(m)), m >= m_star});
    }
    return outcomes;
}

MultiModeState two_pair_state(const SqueezedParams &sp, int n_max) {
    auto pair = two_mode_squeezed(sp, n_max, "A", "B");
    return tensor(pair, pair);
}

MultiModeState collapsed_state(const SqueezedParams &sp, int m, int state_n_max) {
    if (m < 0 || m > state_n_max) {
        throw std::invalid_argument("collapsed_state: need 0 <= m <= state_n_max");
    }
    const std::vector<std::string> bob{std::string(kB1), std::string(kB2)};
    auto projection = project_total_number(two_pair_state(sp, state_n_max), bob, m);
    if (!projection.state) {
        throw std::domain_error("collapsed_state: outcome " + std::to_string(m) + " is impossible");
    }
    return std::move(*projection.state);
}

ConcentrationStats run_monte_carlo(const SqueezedParams &sp, const ReadoutConfig &cfg, std::int64_t trials, Rng &rng) {
    if (trials < 1) {
        throw std::invalid_argument("run_monte_carlo: trials must be >= 1");
    }
    cfg.validate();
    int cutoff = outcome_cutoff(sp, kSamplingTailTol);
    std::vector<double> weights;
    weights.reserve(cutoff + 1);
    for (int m = 0; m <= cutoff; ++m) {
        weights.push_back(p_m(sp, m));
    }
    std::discrete_distribution<int> outcome(weights.begin(), weights.end());
    int m_star = smallest_improving_m(sp);

    ConcentrationStats stats;
    stats.trials = trials;
    std::int64_t success = 0, raw_success = 0, keep_all = 0, kept = 0;
    double kept_entanglement = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        int m_true = outcome(rng);
        int m_read = sample_homodyne(m_true, cfg, rng).decoded_m;
        stats.true_histogram[m_true]++;
        stats.outcome_histogram[m_read]++;
        if (m_read != m_true) {
            stats.misdecode_count++;
        }
        if (m_read >= 1) {
            keep_all++;
        }
        if (m_read >= m_star) {
            kept++;
            kept_entanglement += std::log1p(static_cast<double>(m_true));
            if (m_true >= m_star) {
                success++;
                if (m_read == m_true) {
                    raw_success++;
                }
            }
        }
    }
    double n = static_cast<double>(trials);
    stats.empirical_success_rate = success / n;
    stats.raw_success_rate = raw_success / n;
    stats.keep_all_rate = keep_all / n;
    stats.mean_kept_entanglement = kept > 0 ? kept_entanglement / kept : 0.0;
    return stats;
}

}  // namespace kerrqnd
