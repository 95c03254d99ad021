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

#ifndef KERRQND_FOCK_H
#define KERRQND_FOCK_H

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kerrqnd {

using cdouble = std::complex<double>;

/// Tolerance on |norm^2 - 1| for operations that require a normalized state.
inline constexpr double kNormTolerance = 1e-10;

/// Projection outcomes below this probability are treated as impossible.
inline constexpr double kImpossibleOutcome = 1e-14;

/// Schmidt coefficients below this are dropped before p ln p.
inline constexpr double kSchmidtCutoff = 1e-12;

/// Canonical four-mode labels. Four-mode states are always ordered this way.
inline constexpr std::string_view kA1 = "A1";
inline constexpr std::string_view kA2 = "A2";
inline constexpr std::string_view kB1 = "B1";
inline constexpr std::string_view kB2 = "B2";

/// Two-mode squeezing strength r >= 0 with lambda = tanh(r) cached.
class SqueezedParams {
   public:
    SqueezedParams() = default;
    static SqueezedParams from_r(double r);
    /// Requires 0 <= lambda < 1.
    static SqueezedParams from_lambda(double lambda);

    double r() const { return r_; }
    double lambda() const { return lambda_; }
    /// Mean photon number per mode, sinh^2(r).
    double mean_photon_number() const;

   private:
    SqueezedParams(double r, double lambda) : r_(r), lambda_(lambda) {}
    double r_ = 0;
    double lambda_ = 0;
};

/// Dense truncated Fock amplitude tensor over 2 or 4 bosonic modes.
///
/// Each mode holds occupations 0..n_max. Mode 0 is the slowest-varying index
/// of the flat storage. `truncation_deficit` is the probability weight of the
/// untruncated state that lies outside the stored support; constructors that
/// renormalize record it here and combining operations propagate it.
class MultiModeState {
   public:
    MultiModeState(std::vector<std::string> labels, int n_max);

    int mode_count() const { return static_cast<int>(labels_.size()); }
    int n_max() const { return n_max_; }
    std::size_t size() const { return amplitudes_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }

    /// Position of `label` in the mode order. Throws std::invalid_argument.
    int mode_index(std::string_view label) const;

    std::span<const cdouble> amplitudes() const { return amplitudes_; }
    std::span<cdouble> amplitudes() { return amplitudes_; }

    std::size_t flat_index(std::span<const int> occupations) const;
    /// Occupation of `mode` in the basis state at `flat`.
    int occupation(std::size_t flat, int mode) const;
    std::size_t stride(int mode) const { return strides_[mode]; }

    cdouble amplitude(std::span<const int> occupations) const { return amplitudes_[flat_index(occupations)]; }
    cdouble amplitude(std::initializer_list<int> occupations) const;
    void set_amplitude(std::span<const int> occupations, cdouble value);
    void set_amplitude(std::initializer_list<int> occupations, cdouble value);

    double norm_squared() const;
    bool is_normalized() const;
    /// Copy scaled to unit norm. Throws std::domain_error for the zero state.
    MultiModeState normalized() const;

    double truncation_deficit() const { return truncation_deficit_; }
    double retained_weight() const { return 1.0 - truncation_deficit_; }
    void set_truncation_deficit(double d) { truncation_deficit_ = d; }

    bool same_shape(const MultiModeState &other) const;

   private:
    std::vector<std::string> labels_;
    int n_max_;
    std::vector<std::size_t> strides_;
    std::vector<cdouble> amplitudes_;
    double truncation_deficit_ = 0;
};

/// A split of a state's modes into two non-empty disjoint groups.
struct Bipartition {
    std::vector<std::string> side_a;
    std::vector<std::string> side_b;

    /// Throws std::invalid_argument unless the sides cover `s` exactly.
    void validate(const MultiModeState &s) const;
};

/// Smallest cutoff N with lambda^(2(N+1)) < tail_tol, i.e. the squeezed-pair
/// weight beyond N falls under the tolerance.
int truncation_for(double lambda, double tail_tol);

/// sqrt(1 - lambda^2) sum_n lambda^n |n, n>, truncated at n_max and
/// renormalized. Modes are labelled {label_a, label_b}.
MultiModeState two_mode_squeezed(const SqueezedParams &sp, int n_max, std::string label_a = "A",
                                 std::string label_b = "B");

/// Product of two pairs (a1, b1) and (a2, b2) in the mode order
/// (a1, a2, b1, b2); labels get the suffixes "1" and "2".
MultiModeState tensor(const MultiModeState &s1, const MultiModeState &s2);

/// Applies the annihilation operator of `mode`. The result is unnormalized;
/// its squared norm is the mean occupation of that mode.
MultiModeState annihilate(const MultiModeState &s, std::string_view mode);

/// Probability of each total occupation m of `modes`, indexed by m.
std::vector<double> total_number_distribution(const MultiModeState &s, std::span<const std::string> modes);

/// Joint distribution of (sum over modes_a, sum over modes_b); entry
/// [m_a][m_b].
std::vector<std::vector<double>> joint_number_distribution(const MultiModeState &s,
                                                           std::span<const std::string> modes_a,
                                                           std::span<const std::string> modes_b);

struct Projection {
    double probability = 0;
    /// Renormalized post-measurement state; empty for impossible outcomes.
    std::optional<MultiModeState> state;
};

/// Projects onto sum_{modes} n = m. Throws std::domain_error for m outside
/// 0..|modes|*n_max.
Projection project_total_number(const MultiModeState &s, std::span<const std::string> modes, int m);

/// Projects onto the joint sector (sum over modes_a = m_a, sum over
/// modes_b = m_b).
Projection project_joint_number(const MultiModeState &s, std::span<const std::string> modes_a, int m_a,
                                std::span<const std::string> modes_b, int m_b);

/// Schmidt coefficients (squared singular values) of the amplitude matrix
/// reshaped across `cut`, largest first.
std::vector<double> schmidt_probabilities(const MultiModeState &s, const Bipartition &cut);

/// Von Neumann entropy (nats) of the reduced state on `cut.side_a`.
double entanglement_entropy(const MultiModeState &s, const Bipartition &cut);

/// The standard A1A2 | B1B2 split of a four-mode state.
Bipartition alice_bob_cut();

/// sum_n |n, m-n>_{A1A2} |n, m-n>_{B1B2} with uniform weight, normalized.
/// When m > n_max only the representable terms are kept.
MultiModeState ideal_m_state(int m, int n_max);

/// |<s1|s2>|^2 for two normalized states of the same shape.
double fidelity(const MultiModeState &s1, const MultiModeState &s2);

/// Vacuum on the given modes.
MultiModeState vacuum(std::vector<std::string> labels, int n_max);

}  // namespace kerrqnd

#endif
