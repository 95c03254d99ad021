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

#ifndef KERRQND_KERR_PARAMS_H
#define KERRQND_KERR_PARAMS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace kerrqnd {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Default numeric reading of "much less than": a ratio must stay below this.
inline constexpr double kMuchLessThreshold = 0.1;

/// Raised when parameters are well formed but outside the physical regime a
/// model is valid in.
class RegimeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Converts a cyclic frequency (the "/2pi" quantity, in Hz) to rad/s.
constexpr double to_angular(double cyclic_hz) { return kTwoPi * cyclic_hz; }

/// Circuit-level parameters of the molecule-mediated cross-Kerr coupling.
///
/// Every field is a cyclic frequency in Hz. Conversion to angular units is
/// done inside the operations that need it, never by the caller.
struct CircuitParams {
    double g1_hz = 0;           // resonator A coupling
    double g2_hz = 0;           // resonator B coupling
    double delta_big_hz = 0;    // detuning Delta, signed, nonzero
    double delta_small_hz = 0;  // detuning delta, signed
    double omega_c_hz = 0;      // classical drive strength
    double kappa1_hz = 0;       // readout resonator decay
    double kappa2_hz = 0;       // storage resonator decay

    /// Throws std::invalid_argument on negative couplings/rates, non-finite
    /// values, or a zero Delta.
    void validate() const;
};

/// Imperfections of a real QND chain.
struct ImperfectionParams {
    double phase_instability_rad = 0;
    double kappa_r1_hz = 0;
    double kappa_r2_hz = 0;
    double chi1_hz = 0;
    double chi2_hz = 0;
    double gamma1_hz = 0;
    double gamma2_hz = 0;
    double n_b1 = 0;
    double n_b2 = 0;

    void validate() const;
};

enum class CheckStatus { kPass, kFail, kNotEvaluable };

const char *to_string(CheckStatus status);

/// One inequality `ratio < bound`.
struct FeasibilityCheck {
    std::string name;
    double ratio = 0;
    double bound = 0;
    CheckStatus status = CheckStatus::kNotEvaluable;

    bool passed() const { return status == CheckStatus::kPass; }
};

struct FeasibilityReport {
    double chi_hz = 0;
    std::vector<FeasibilityCheck> checks;

    /// True when no check has status kFail. Not-evaluable checks do not fail.
    bool all_passed() const;
    const FeasibilityCheck &check(const std::string &name) const;
};

/// Builds a check whose status is derived from `ratio < bound`; non-finite
/// operands produce kNotEvaluable.
FeasibilityCheck make_check(std::string name, double ratio, double bound);

/// Signed cross-Kerr coefficient chi/2pi in Hz: -g1^2 g2^2 / (Delta Omega_c^2).
/// Throws std::domain_error when Delta or Omega_c is zero.
double effective_chi_hz(const CircuitParams &p);

/// Ratio checks |g1/Omega_c|^2, |g2/Delta| and |chi|/kappa1, each against
/// `threshold`. Never throws for parameters that pass validate().
FeasibilityReport validate_regime(const CircuitParams &p, double threshold = kMuchLessThreshold);

struct MeasurementWindow {
    double tau_min_s = 0;
    double tau_max_s = 0;

    bool feasible() const { return tau_min_s < tau_max_s; }
};

/// Homodyne integration window kappa1/(64 |g|^2 chi^2) < tau < 1/kappa2, all
/// rates angular. Throws std::domain_error for chi = 0 and
/// std::invalid_argument for g_mag <= 0 or kappa2 <= 0.
MeasurementWindow measurement_window(const CircuitParams &p, double g_mag);

/// Phase instability, cavity mismatch and per-resonator loss bounds.
/// Checks whose bound would divide by zero are reported as kNotEvaluable.
FeasibilityReport check_imperfections(const CircuitParams &p, const ImperfectionParams &imp);

}  // namespace kerrqnd

#endif
