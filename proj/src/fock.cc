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

#include "kerrqnd/fock.h"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace kerrqnd {

SqueezedParams SqueezedParams::from_r(double r) {
    if (!std::isfinite(r) || r < 0) {
        throw std::invalid_argument("squeezing parameter r must be finite and nonnegative");
    }
    double lambda = std::tanh(r);
    if (lambda >= 1.0) {
        throw std::invalid_argument("squeezing parameter r too large: tanh(r) rounds to 1");
    }
    return SqueezedParams(r, lambda);
}

SqueezedParams SqueezedParams::from_lambda(double lambda) {
    if (!(lambda >= 0 && lambda < 1)) {
        throw std::invalid_argument("lambda must lie in [0, 1)");
    }
    return SqueezedParams(std::atanh(lambda), lambda);
}

double SqueezedParams::mean_photon_number() const {
    double s = std::sinh(r_);
    return s * s;
}

MultiModeState::MultiModeState(std::vector<std::string> labels, int n_max) : labels_(std::move(labels)), n_max_(n_max) {
    if (labels_.size() != 2 && labels_.size() != 4) {
        throw std::invalid_argument("MultiModeState supports 2 or 4 modes");
    }
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be nonnegative");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j]) {
                throw std::invalid_argument("duplicate mode label '" + labels_[i] + "'");
            }
        }
    }
    std::size_t dim = static_cast<std::size_t>(n_max) + 1;
    strides_.assign(labels_.size(), 1);
    for (int k = mode_count() - 2; k >= 0; --k) {
        strides_[k] = strides_[k + 1] * dim;
    }
    amplitudes_.assign(strides_[0] * dim, cdouble{0, 0});
}

int MultiModeState::mode_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return static_cast<int>(i);
        }
    }
    throw std::invalid_argument("unknown mode label '" + std::string(label) + "'");
}

std::size_t MultiModeState::flat_index(std::span<const int> occupations) const {
    if (occupations.size() != labels_.size()) {
        throw std::invalid_argument("occupation list length does not match mode count");
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < occupations.size(); ++k) {
        if (occupations[k] < 0 || occupations[k] > n_max_) {
            throw std::out_of_range("occupation outside 0..n_max");
        }
        flat += static_cast<std::size_t>(occupations[k]) * strides_[k];
    }
    return flat;
}

int MultiModeState::occupation(std::size_t flat, int mode) const {
    return static_cast<int>((flat / strides_[mode]) % (static_cast<std::size_t>(n_max_) + 1));
}

cdouble MultiModeState::amplitude(std::initializer_list<int> occupations) const {
    return amplitude(std::span<const int>(occupations.begin(), occupations.size()));
}

void MultiModeState::set_amplitude(std::span<const int> occupations, cdouble value) {
    amplitudes_[flat_index(occupations)] = value;
}

void MultiModeState::set_amplitude(std::initializer_list<int> occupations, cdouble value) {
    set_amplitude(std::span<const int>(occupations.begin(), occupations.size()), value);
}

double MultiModeState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

bool MultiModeState::is_normalized() const { return std::abs(norm_squared() - 1.0) < kNormTolerance; }

MultiModeState MultiModeState::normalized() const {
    double n2 = norm_squared();
    if (!(n2 > 0)) {
        throw std::domain_error("cannot normalize the zero state");
    }
    MultiModeState out = *this;
    double scale = 1.0 / std::sqrt(n2);
    for (auto &a : out.amplitudes_) {
        a *= scale;
    }
    return out;
}

bool MultiModeState::same_shape(const MultiModeState &other) const {
    return n_max_ == other.n_max_ && labels_ == other.labels_;
}

void Bipartition::validate(const MultiModeState &s) const {
    if (side_a.empty() || side_b.empty()) {
        throw std::invalid_argument("bipartition sides must be non-empty");
    }
    std::vector<int> seen(s.mode_count(), 0);
    for (const auto &label : side_a) {
        seen[s.mode_index(label)]++;
    }
    for (const auto &label : side_b) {
        seen[s.mode_index(label)]++;
    }
    for (int count : seen) {
        if (count != 1) {
            throw std::invalid_argument("bipartition must be a disjoint cover of all modes");
        }
    }
}

namespace {

void require_normalized(const MultiModeState &s, const char *op) {
    if (!s.is_normalized()) {
        throw std::invalid_argument(std::string(op) + ": state must be normalized");
    }
}

std::vector<int> mode_indices(const MultiModeState &s, std::span<const std::string> modes) {
    std::vector<int> out;
    out.reserve(modes.size());
    for (const auto &label : modes) {
        int idx = s.mode_index(label);
        if (std::find(out.begin(), out.end(), idx) != out.end()) {
            throw std::invalid_argument("mode '" + label + "' listed twice");
        }
        out.push_back(idx);
    }
    return out;
}

int sector_of(const MultiModeState &s, std::size_t flat, const std::vector<int> &modes) {
    int total = 0;
    for (int m : modes) {
        total += s.occupation(flat, m);
    }
    return total;
}

Projection finish_projection(MultiModeState projected) {
    Projection out;
    out.probability = projected.norm_squared();
    if (out.probability >= kImpossibleOutcome) {
        out.state = projected.normalized();
    }
    return out;
}

}  // namespace

int truncation_for(double lambda, double tail_tol) {
    if (!(lambda >= 0 && lambda < 1)) {
        throw std::invalid_argument("truncation_for: lambda must lie in [0, 1)");
    }
    if (!(tail_tol > 0 && tail_tol < 1)) {
        throw std::invalid_argument("truncation_for: tail tolerance must lie in (0, 1)");
    }
    if (lambda == 0) {
        return 0;
    }
    auto tail = [lambda](int n) { return std::pow(lambda, 2.0 * (n + 1)); };
    int n = std::max(0, static_cast<int>(std::ceil(std::log(tail_tol) / (2.0 * std::log(lambda)))) - 1);
    while (tail(n) >= tail_tol) {
        ++n;
    }
    while (n > 0 && tail(n - 1) < tail_tol) {
        --n;
    }
    return n;
}

MultiModeState vacuum(std::vector<std::string> labels, int n_max) {
    MultiModeState s(std::move(labels), n_max);
    s.amplitudes()[0] = 1.0;
    return s;
}

MultiModeState two_mode_squeezed(const SqueezedParams &sp, int n_max, std::string label_a, std::string label_b) {
    MultiModeState s({std::move(label_a), std::move(label_b)}, n_max);
    double lambda = sp.lambda();
    double deficit = std::pow(lambda, 2.0 * (n_max + 1));
    double scale = std::sqrt((1.0 - lambda * lambda) / (1.0 - deficit));
    double power = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        s.set_amplitude({n, n}, scale * power);
        power *= lambda;
    }
    s.set_truncation_deficit(deficit);
    return s;
}

MultiModeState tensor(const MultiModeState &s1, const MultiModeState &s2) {
    if (s1.mode_count() != 2 || s2.mode_count() != 2) {
        throw std::invalid_argument("tensor: both inputs must be two-mode states");
    }
    if (s1.n_max() != s2.n_max()) {
        throw std::invalid_argument("tensor: mismatched Fock cutoffs");
    }
    const auto &l1 = s1.labels();
    const auto &l2 = s2.labels();
    MultiModeState out({l1[0] + "1", l2[0] + "2", l1[1] + "1", l2[1] + "2"}, s1.n_max());
    int dim = s1.n_max() + 1;
    auto a1 = s1.amplitudes();
    auto a2 = s2.amplitudes();
    auto dst = out.amplitudes();
    // out(x1, x2, y1, y2) = s1(x1, y1) * s2(x2, y2)
    for (int x1 = 0; x1 < dim; ++x1) {
        for (int x2 = 0; x2 < dim; ++x2) {
            for (int y1 = 0; y1 < dim; ++y1) {
                cdouble left = a1[x1 * dim + y1];
                std::size_t base = ((static_cast<std::size_t>(x1) * dim + x2) * dim + y1) * dim;
                for (int y2 = 0; y2 < dim; ++y2) {
                    dst[base + y2] = left * a2[x2 * dim + y2];
                }
            }
        }
    }
    out.set_truncation_deficit(1.0 - s1.retained_weight() * s2.retained_weight());
    return out;
}

MultiModeState annihilate(const MultiModeState &s, std::string_view mode) {
    int k = s.mode_index(mode);
    MultiModeState out(s.labels(), s.n_max());
    auto src = s.amplitudes();
    auto dst = out.amplitudes();
    std::size_t stride = s.stride(k);
    for (std::size_t flat = 0; flat < src.size(); ++flat) {
        int n = s.occupation(flat, k);
        if (n < s.n_max()) {
            dst[flat] = std::sqrt(static_cast<double>(n + 1)) * src[flat + stride];
        }
    }
    out.set_truncation_deficit(s.truncation_deficit());
    return out;
}

std::vector<double> total_number_distribution(const MultiModeState &s, std::span<const std::string> modes) {
    require_normalized(s, "total_number_distribution");
    auto idx = mode_indices(s, modes);
    std::vector<double> dist(idx.size() * s.n_max() + 1, 0.0);
    auto amps = s.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        dist[sector_of(s, flat, idx)] += std::norm(amps[flat]);
    }
    return dist;
}

std::vector<std::vector<double>> joint_number_distribution(const MultiModeState &s,
                                                           std::span<const std::string> modes_a,
                                                           std::span<const std::string> modes_b) {
    require_normalized(s, "joint_number_distribution");
    auto ia = mode_indices(s, modes_a);
    auto ib = mode_indices(s, modes_b);
    std::vector<std::vector<double>> dist(ia.size() * s.n_max() + 1,
                                          std::vector<double>(ib.size() * s.n_max() + 1, 0.0));
    auto amps = s.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        dist[sector_of(s, flat, ia)][sector_of(s, flat, ib)] += std::norm(amps[flat]);
    }
    return dist;
}

Projection project_total_number(const MultiModeState &s, std::span<const std::string> modes, int m) {
    require_normalized(s, "project_total_number");
    auto idx = mode_indices(s, modes);
    if (m < 0 || m > static_cast<int>(idx.size()) * s.n_max()) {
        throw std::domain_error("project_total_number: outcome outside 0..|modes|*n_max");
    }
    MultiModeState projected = s;
    auto amps = projected.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (sector_of(s, flat, idx) != m) {
            amps[flat] = 0;
        }
    }
    return finish_projection(std::move(projected));
}

Projection project_joint_number(const MultiModeState &s, std::span<const std::string> modes_a, int m_a,
                                std::span<const std::string> modes_b, int m_b) {
    require_normalized(s, "project_joint_number");
    auto ia = mode_indices(s, modes_a);
    auto ib = mode_indices(s, modes_b);
    if (m_a < 0 || m_a > static_cast<int>(ia.size()) * s.n_max() || m_b < 0 ||
        m_b > static_cast<int>(ib.size()) * s.n_max()) {
        throw std::domain_error("project_joint_number: outcome outside representable range");
    }
    MultiModeState projected = s;
    auto amps = projected.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (sector_of(s, flat, ia) != m_a || sector_of(s, flat, ib) != m_b) {
            amps[flat] = 0;
        }
    }
    return finish_projection(std::move(projected));
}

std::vector<double> schmidt_probabilities(const MultiModeState &s, const Bipartition &cut) {
    cut.validate(s);
    auto ia = mode_indices(s, cut.side_a);
    auto ib = mode_indices(s, cut.side_b);
    std::size_t dim = static_cast<std::size_t>(s.n_max()) + 1;
    auto side_index = [&](std::size_t flat, const std::vector<int> &modes) {
        std::size_t idx = 0;
        for (int m : modes) {
            idx = idx * dim + static_cast<std::size_t>(s.occupation(flat, m));
        }
        return idx;
    };
    std::size_t rows = 1, cols = 1;
    for (std::size_t i = 0; i < ia.size(); ++i) rows *= dim;
    for (std::size_t i = 0; i < ib.size(); ++i) cols *= dim;

    Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    auto amps = s.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (amps[flat] != cdouble{0, 0}) {
            matrix(static_cast<Eigen::Index>(side_index(flat, ia)), static_cast<Eigen::Index>(side_index(flat, ib))) =
                amps[flat];
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(matrix);
    const auto &sv = svd.singularValues();
    std::vector<double> probs;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) >= kSchmidtCutoff) {
            probs.push_back(sv(i) * sv(i));
        }
    }
    std::sort(probs.begin(), probs.end(), std::greater<>());
    return probs;
}

double entanglement_entropy(const MultiModeState &s, const Bipartition &cut) {
    require_normalized(s, "entanglement_entropy");
    double entropy = 0;
    for (double p : schmidt_probabilities(s, cut)) {
        entropy -= p * std::log(p);
    }
    return std::max(entropy, 0.0);
}

Bipartition alice_bob_cut() {
    return Bipartition{{std::string(kA1), std::string(kA2)}, {std::string(kB1), std::string(kB2)}};
}

MultiModeState ideal_m_state(int m, int n_max) {
    if (m < 0 || m > 2 * n_max) {
        throw std::invalid_argument("ideal_m_state: m must lie in 0..2*n_max");
    }
    MultiModeState s({std::string(kA1), std::string(kA2), std::string(kB1), std::string(kB2)}, n_max);
    int lo = std::max(0, m - n_max);
    int hi = std::min(m, n_max);
    double amp = 1.0 / std::sqrt(static_cast<double>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) {
        s.set_amplitude({n, m - n, n, m - n}, amp);
    }
    return s;
}

double fidelity(const MultiModeState &s1, const MultiModeState &s2) {
    if (!s1.same_shape(s2)) {
        throw std::invalid_argument("fidelity: states differ in shape");
    }
    require_normalized(s1, "fidelity");
    require_normalized(s2, "fidelity");
    auto a = s1.amplitudes();
    auto b = s2.amplitudes();
    cdouble overlap{0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::min(std::norm(overlap), 1.0);
}

}  // namespace kerrqnd
