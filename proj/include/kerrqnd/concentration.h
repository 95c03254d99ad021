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

#ifndef KERRQND_CONCENTRATION_H
#define KERRQND_CONCENTRATION_H

#include <cstdint>
#include <map>
#include <vector>

#include "kerrqnd/fock.h"
#include "kerrqnd/qnd_readout.h"

namespace kerrqnd {

/// Entanglement (nats) of a single two-mode squeezed pair,
/// cosh^2 r ln cosh^2 r - sinh^2 r ln sinh^2 r.
double squeezed_pair_entropy(const SqueezedParams &sp);

/// Probability that Bob's total photon number over two pairs equals m:
/// ((1 - lambda^2) lambda^m)^2 (1 + m).
double p_m(const SqueezedParams &sp, int m);

/// Closed-form weight of all outcomes above m_max.
double outcome_tail_mass(const SqueezedParams &sp, int m_max);

/// Smallest m_max whose outcome tail mass is below tail_tol.
int outcome_cutoff(const SqueezedParams &sp, double tail_tol);

/// Real threshold [cosh^2 r]^{cosh^2 r} / [sinh^2 r]^{sinh^2 r} - 1; an
/// outcome m improves on a single pair iff m exceeds it. Zero at r = 0.
double entanglement_threshold(const SqueezedParams &sp);

/// Smallest integer outcome that beats one pair; 1 at r = 0.
int smallest_improving_m(const SqueezedParams &sp);

/// Sum of p_m over improving outcomes m <= n_max.
double success_probability(const SqueezedParams &sp, int n_max);

struct ConcentrationOutcome {
    int m = 0;
    double probability = 0;
    double entanglement_nats = 0;
    bool improved = false;
};

/// Every outcome m = 0..n_max of Bob's measurement. Post-measurement states
/// are built on demand with collapsed_state().
std::vector<ConcentrationOutcome> run_ideal(const SqueezedParams &sp, int n_max);

/// Bob's collapsed state for outcome m, obtained by projecting the two-pair
/// state held at `state_n_max` (must be >= m).
MultiModeState collapsed_state(const SqueezedParams &sp, int m, int state_n_max);

/// Two squeezed pairs in the (A1, A2, B1, B2) order.
MultiModeState two_pair_state(const SqueezedParams &sp, int n_max);

struct ConcentrationStats {
    std::int64_t trials = 0;
    std::map<int, std::int64_t> outcome_histogram;  // decoded m
    std::map<int, std::int64_t> true_histogram;     // sampled true m
    std::int64_t misdecode_count = 0;
    /// Decoded m improves and the true m does too.
    double empirical_success_rate = 0;
    /// Decoded m improves and equals the true m.
    double raw_success_rate = 0;
    /// Decoded m >= 1.
    double keep_all_rate = 0;
    /// Mean ln(1 + true m) over trials kept as improving.
    double mean_kept_entanglement = 0;
};

/// Default outcome tail tolerance for Monte Carlo sampling.
inline constexpr double kSamplingTailTol = 1e-12;

/// Samples true outcomes from p_m, reads them through the noisy homodyne
/// chain and aggregates what Bob would decide. Throws for trials < 1.
ConcentrationStats run_monte_carlo(const SqueezedParams &sp, const ReadoutConfig &cfg, std::int64_t trials, Rng &rng);

}  // namespace kerrqnd

#endif
