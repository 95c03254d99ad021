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

#ifndef KERRQND_PURIFICATION_H
#define KERRQND_PURIFICATION_H

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "kerrqnd/fock.h"
#include "kerrqnd/qnd_readout.h"

namespace kerrqnd {

/// Total jump weight at which the single-jump model is rejected outright.
inline constexpr double kJumpHardLimit = 0.5;
/// Total jump weight above which results are flagged as approximate.
inline constexpr double kJumpWarnLimit = 0.1;
/// Per-side bound on nbar * eta_x * t_tx for the small-loss expansion.
inline constexpr double kSmallLossLimit = 0.1;
/// Default Fock tail tolerance for purification branch states.
inline constexpr double kPurificationTailTol = 1e-8;

/// Loss during distribution. Rates in 1/s, t_tx in s.
struct ChannelParams {
    double eta_a = 0;
    double eta_b = 0;
    double t_tx = 0;

    double eta_total() const { return eta_a + eta_b; }
    void validate() const;
};

enum class BranchKind { kNoJump, kJump };

struct TrajectoryBranch {
    BranchKind kind = BranchKind::kNoJump;
    std::string mode;  // jumped mode, empty for kNoJump
    double weight = 0;

    std::string name() const;
};

struct BranchSet {
    /// No-jump branch first, then jumps in A1, A2, B1, B2 order; zero-weight
    /// jumps are omitted. Weights sum to 1.
    std::vector<TrajectoryBranch> branches;
    double total_jump_weight = 0;
    /// (1 - lambda^2)^2 / (1 - lambda^2 e^{-eta t})^2, reported for comparison.
    double p_no_closed_form = 1;
    bool small_loss_ok = true;
    bool jump_weight_ok = true;  // total jump weight below kJumpWarnLimit
};

/// Closed-form norm of the no-jump branch.
double p_no_closed_form(const SqueezedParams &sp, const ChannelParams &ch);

/// First-order trajectory branches: each jump on side x weighs nbar eta_x t_tx,
/// the no-jump branch takes the complement. Throws RegimeError when the jumps
/// add up to kJumpHardLimit or more.
BranchSet branch_probabilities(const SqueezedParams &sp, const ChannelParams &ch);

/// Two-pair state with every m-sector damped by e^{-eta t m / 2},
/// normalized.
MultiModeState no_jump_state(const SqueezedParams &sp, const ChannelParams &ch, int n_max);

/// a_mode applied to the two-pair state, normalized.
MultiModeState jump_state(const SqueezedParams &sp, std::string_view mode, int n_max);

/// Probability that both parties' totals agree, sum_m P(m_A = m, m_B = m).
double matched_sector_probability(const MultiModeState &s);

struct TrialRecord {
    std::size_t branch_index = 0;
    int m_a = 0;       // true Alice total
    int m_b = 0;       // true Bob total
    int m_a_read = 0;  // decoded
    int m_b_read = 0;
    bool kept = false;
    bool false_accept = false;
    double entanglement_nats = 0;
    double fidelity = 0;
};

struct PurificationStats {
    std::int64_t trials = 0;
    std::int64_t kept = 0;
    std::int64_t discarded = 0;
    std::int64_t false_accepts = 0;
    double kept_entanglement_mean = 0;
    double kept_fidelity_mean = 0;
    std::map<std::string, std::int64_t> branch_histogram;

    double yield() const { return trials > 0 ? static_cast<double>(kept) / trials : 0.0; }
};

/// Runs purification trials for one parameter set. Branch states and their
/// joint sector distributions are built once at construction.
class PurificationSimulator {
   public:
    PurificationSimulator(const SqueezedParams &sp, const ChannelParams &ch, const ReadoutConfig &alice,
                          const ReadoutConfig &bob, double tail_tol = kPurificationTailTol);

    const BranchSet &branches() const { return branches_; }
    int n_max() const { return n_max_; }
    const MultiModeState &branch_state(std::size_t index) const { return cache_[index].state; }

    /// Samples a branch and both parties' reads; keeps iff the decoded totals
    /// agree.
    TrialRecord run_trial(Rng &rng);
    PurificationStats run_batch(std::int64_t trials, Rng &rng);

   private:
    struct BranchCache {
        MultiModeState state;
        int sector_cols;
        std::discrete_distribution<int> sectors;
    };

    double kept_fidelity(std::size_t branch, int m_a, int m_b, int m);

    SqueezedParams sp_;
    ReadoutConfig alice_;
    ReadoutConfig bob_;
    BranchSet branches_;
    int n_max_;
    std::vector<BranchCache> cache_;
    std::discrete_distribution<int> branch_pick_;
    std::map<std::tuple<std::size_t, int, int, int>, double> fidelity_cache_;
};

/// Single trial with freshly built branch states.
TrialRecord run_trial(const SqueezedParams &sp, const ChannelParams &ch, const ReadoutConfig &alice,
                      const ReadoutConfig &bob, Rng &rng);

PurificationStats run_batch(const SqueezedParams &sp, const ChannelParams &ch, const ReadoutConfig &alice,
                            const ReadoutConfig &bob, std::int64_t trials, Rng &rng,
                            double tail_tol = kPurificationTailTol);

}  // namespace kerrqnd

#endif
