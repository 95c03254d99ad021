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

#include "kerrqnd/purification.h"

#include <cmath>
#include <stdexcept>

#include "kerrqnd/concentration.h"

namespace kerrqnd {

namespace {

const std::vector<std::string> &alice_modes() {
    static const std::vector<std::string> modes{std::string(kA1), std::string(kA2)};
    return modes;
}

const std::vector<std::string> &bob_modes() {
    static const std::vector<std::string> modes{std::string(kB1), std::string(kB2)};
    return modes;
}

bool is_alice_mode(std::string_view mode) { return mode == kA1 || mode == kA2; }

}  // namespace

void ChannelParams::validate() const {
    if (!(eta_a >= 0) || !(eta_b >= 0) || !(t_tx >= 0) || !std::isfinite(eta_a) || !std::isfinite(eta_b) ||
        !std::isfinite(t_tx)) {
        throw std::invalid_argument("channel: loss rates and transmission time must be finite and nonnegative");
    }
}

std::string TrajectoryBranch::name() const {
    return kind == BranchKind::kNoJump ? std::string("no_jump") : "jump_" + mode;
}

double p_no_closed_form(const SqueezedParams &sp, const ChannelParams &ch) {
    double x = sp.lambda() * sp.lambda();
    double ratio = (1.0 - x) / (1.0 - x * std::exp(-ch.eta_total() * ch.t_tx));
    return ratio * ratio;
}

BranchSet branch_probabilities(const SqueezedParams &sp, const ChannelParams &ch) {
    ch.validate();
    double nbar = sp.mean_photon_number();
    double per_a = nbar * ch.eta_a * ch.t_tx;
    double per_b = nbar * ch.eta_b * ch.t_tx;

    BranchSet set;
    set.p_no_closed_form = p_no_closed_form(sp, ch);
    set.small_loss_ok = per_a < kSmallLossLimit && per_b < kSmallLossLimit;
    set.total_jump_weight = 2.0 * (per_a + per_b);
    if (set.total_jump_weight >= kJumpHardLimit) {
        throw RegimeError("purification: total jump weight " + std::to_string(set.total_jump_weight) +
                          " is outside the single-jump model");
    }
    set.jump_weight_ok = set.total_jump_weight < kJumpWarnLimit;

    set.branches.push_back({BranchKind::kNoJump, "", 1.0 - set.total_jump_weight});
    for (std::string_view mode : {kA1, kA2, kB1, kB2}) {
        double w = is_alice_mode(mode) ? per_a : per_b;
        if (w > 0) {
            set.branches.push_back({BranchKind::kJump, std::string(mode), w});
        }
    }
    return set;
}

MultiModeState no_jump_state(const SqueezedParams &sp, const ChannelParams &ch, int n_max) {
    ch.validate();
    // A factor e^{-eta t m/2} on sector m is lambda -> lambda e^{-eta t/2} per pair.
    auto damped = SqueezedParams::from_lambda(sp.lambda() * std::exp(-ch.eta_total() * ch.t_tx / 2.0));
    return two_pair_state(damped, n_max);
}

MultiModeState jump_state(const SqueezedParams &sp, std::string_view mode, int n_max) {
    if (mode != kA1 && mode != kA2 && mode != kB1 && mode != kB2) {
        throw std::invalid_argument("jump_state: unknown mode '" + std::string(mode) + "'");
    }
    return annihilate(two_pair_state(sp, n_max), mode).normalized();
}

double matched_sector_probability(const MultiModeState &s) {
    auto joint = joint_number_distribution(s, alice_modes(), bob_modes());
    double total = 0;
    for (std::size_t m = 0; m < joint.size() && m < joint[m].size(); ++m) {
        total += joint[m][m];
    }
    return total;
}

PurificationSimulator::PurificationSimulator(const SqueezedParams &sp, const ChannelParams &ch,
                                             const ReadoutConfig &alice, const ReadoutConfig &bob, double tail_tol)
    : sp_(sp), alice_(alice), bob_(bob), branches_(branch_probabilities(sp, ch)) {
    alice_.validate();
    bob_.validate();
    n_max_ = truncation_for(sp.lambda(), tail_tol);

    std::vector<double> weights;
    for (const auto &branch : branches_.branches) {
        MultiModeState state = branch.kind == BranchKind::kNoJump ? no_jump_state(sp, ch, n_max_)
                                                                  : jump_state(sp, branch.mode, n_max_);
        auto joint = joint_number_distribution(state, alice_modes(), bob_modes());
        std::vector<double> flat;
        int cols = static_cast<int>(joint.front().size());
        for (const auto &row : joint) {
            flat.insert(flat.end(), row.begin(), row.end());
        }
        cache_.push_back({std::move(state), cols, std::discrete_distribution<int>(flat.begin(), flat.end())});
        weights.push_back(branch.weight);
    }
    branch_pick_ = std::discrete_distribution<int>(weights.begin(), weights.end());
}

double PurificationSimulator::kept_fidelity(std::size_t branch, int m_a, int m_b, int m) {
    auto key = std::make_tuple(branch, m_a, m_b, m);
    if (auto it = fidelity_cache_.find(key); it != fidelity_cache_.end()) {
        return it->second;
    }
    double f = 0;
    if (m <= 2 * n_max_) {
        auto projection = project_joint_number(cache_[branch].state, alice_modes(), m_a, bob_modes(), m_b);
        if (projection.state) {
            f = fidelity(*projection.state, ideal_m_state(m, n_max_));
        }
    }
    fidelity_cache_.emplace(key, f);
    return f;
}

TrialRecord PurificationSimulator::run_trial(Rng &rng) {
    TrialRecord rec;
    rec.branch_index = static_cast<std::size_t>(branch_pick_(rng));
    auto &cache = cache_[rec.branch_index];
    int sector = cache.sectors(rng);
    rec.m_a = sector / cache.sector_cols;
    rec.m_b = sector % cache.sector_cols;
    rec.m_a_read = sample_homodyne(rec.m_a, alice_, rng).decoded_m;
    rec.m_b_read = sample_homodyne(rec.m_b, bob_, rng).decoded_m;
    rec.kept = rec.m_a_read == rec.m_b_read;
    if (rec.kept) {
        rec.false_accept = branches_.branches[rec.branch_index].kind == BranchKind::kJump;
        rec.entanglement_nats = std::log1p(static_cast<double>(rec.m_a_read));
        rec.fidelity = kept_fidelity(rec.branch_index, rec.m_a, rec.m_b, rec.m_a_read);
    }
    return rec;
}

PurificationStats PurificationSimulator::run_batch(std::int64_t trials, Rng &rng) {
    if (trials < 1) {
        throw std::invalid_argument("run_batch: trials must be >= 1");
    }
    PurificationStats stats;
    stats.trials = trials;
    double entanglement = 0, fid = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        TrialRecord rec = run_trial(rng);
        stats.branch_histogram[branches_.branches[rec.branch_index].name()]++;
        if (rec.kept) {
            stats.kept++;
            entanglement += rec.entanglement_nats;
            fid += rec.fidelity;
            if (rec.false_accept) {
                stats.false_accepts++;
            }
        } else {
            stats.discarded++;
        }
    }
    if (stats.kept > 0) {
        stats.kept_entanglement_mean = entanglement / stats.kept;
        stats.kept_fidelity_mean = fid / stats.kept;
    }
    return stats;
}

TrialRecord run_trial(const SqueezedParams &sp, const ChannelParams &ch, const ReadoutConfig &alice,
                      const ReadoutConfig &bob, Rng &rng) {
    PurificationSimulator sim(sp, ch, alice, bob);
    return sim.run_trial(rng);
}

PurificationStats run_batch(const SqueezedParams &sp, const ChannelParams &ch, const ReadoutConfig &alice,
                            const ReadoutConfig &bob, std::int64_t trials, Rng &rng, double tail_tol) {
    PurificationSimulator sim(sp, ch, alice, bob, tail_tol);
    return sim.run_batch(trials, rng);
}

}  // namespace kerrqnd
