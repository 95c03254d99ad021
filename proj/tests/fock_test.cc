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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "kerrqnd/concentration.h"

using namespace kerrqnd;

namespace {

const std::vector<std::string> kBob{"B1", "B2"};
const std::vector<std::string> kAlice{"A1", "A2"};

MultiModeState random_state(std::mt19937_64 &rng, std::vector<std::string> labels, int n_max) {
    std::normal_distribution<double> g;
    MultiModeState s(std::move(labels), n_max);
    for (auto &a : s.amplitudes()) {
        a = {g(rng), g(rng)};
    }
    return s.normalized();
}

}  // namespace

TEST(fock, squeezed_params) {
    auto sp = SqueezedParams::from_r(0.9);
    EXPECT_NEAR(sp.lambda(), 0.716297870199024, 1e-15);
    EXPECT_NEAR(sp.mean_photon_number(), 1.05373658815863, 1e-13);
    auto back = SqueezedParams::from_lambda(sp.lambda());
    EXPECT_NEAR(back.r(), 0.9, 1e-14);
    EXPECT_THROW(SqueezedParams::from_r(-0.1), std::invalid_argument);
    EXPECT_THROW(SqueezedParams::from_lambda(1.0), std::invalid_argument);
    EXPECT_THROW(SqueezedParams::from_r(std::nan("")), std::invalid_argument);
}

TEST(fock, two_mode_squeezed_amplitudes) {
    auto s = two_mode_squeezed(SqueezedParams::from_r(0.9), 40);
    EXPECT_EQ(s.mode_count(), 2);
    EXPECT_EQ(s.labels()[0], "A");
    EXPECT_EQ(s.labels()[1], "B");
    // Truncation at 40 renormalizes by 1 - lambda^82, far below 1e-12.
    EXPECT_NEAR(s.amplitude({0, 0}).real(), 0.697794641100332, 1e-12);
    EXPECT_NEAR(s.amplitude({1, 1}).real(), 0.499828815256461, 1e-12);
    EXPECT_EQ(s.amplitude({1, 0}), cdouble(0));
    EXPECT_TRUE(s.is_normalized());
    EXPECT_NEAR(s.truncation_deficit(), std::pow(std::tanh(0.9), 82), 1e-20);
}

TEST(fock, two_mode_squeezed_vacuum) {
    auto s = two_mode_squeezed(SqueezedParams::from_r(0), 5);
    EXPECT_EQ(s.amplitude({0, 0}), cdouble(1));
    EXPECT_EQ(s.truncation_deficit(), 0.0);
    EXPECT_NEAR(entanglement_entropy(s, Bipartition{{"A"}, {"B"}}), 0.0, 1e-15);
}

TEST(fock, two_mode_squeezed_rejects_bad_input) {
    EXPECT_THROW(two_mode_squeezed(SqueezedParams::from_r(0.5), -1), std::invalid_argument);
    EXPECT_THROW(two_mode_squeezed(SqueezedParams::from_r(0.5), 3, "A", "A"), std::invalid_argument);
}

TEST(fock, truncation_for_values) {
    EXPECT_EQ(truncation_for(std::tanh(0.9), 1e-10), 34);
    EXPECT_EQ(truncation_for(0.5, 1e-6), 9);
    EXPECT_EQ(truncation_for(0.0, 1e-6), 0);
    EXPECT_THROW(truncation_for(0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(truncation_for(1.0, 1e-6), std::invalid_argument);
}

TEST(fock, truncation_for_is_minimal) {
    for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double tol : {1e-4, 1e-8, 1e-12}) {
            int n = truncation_for(lambda, tol);
            EXPECT_LT(std::pow(lambda, 2 * (n + 1)), tol);
            if (n > 0) {
                EXPECT_GE(std::pow(lambda, 2 * n), tol);
            }
        }
    }
}

TEST(fock, entropy_matches_closed_form) {
    for (double r : {0.3, 0.9, 1.2}) {
        auto sp = SqueezedParams::from_r(r);
        auto s = two_mode_squeezed(sp, truncation_for(sp.lambda(), 1e-12));
        EXPECT_NEAR(entanglement_entropy(s, Bipartition{{"A"}, {"B"}}), squeezed_pair_entropy(sp), 1e-9) << r;
    }
    auto s = two_mode_squeezed(SqueezedParams::from_r(0.9), 60);
    EXPECT_NEAR(entanglement_entropy(s, Bipartition{{"A"}, {"B"}}), 1.42283862908027, 1e-10);
}

TEST(fock, entropy_of_truncated_state) {
    // Renormalizing at n_max = 40 shifts the r = 1.2 entropy by 5.3e-6.
    auto s = two_mode_squeezed(SqueezedParams::from_r(1.2), 40);
    EXPECT_NEAR(entanglement_entropy(s, Bipartition{{"A"}, {"B"}}), 2.016445869143752, 1e-11);
    s = two_mode_squeezed(SqueezedParams::from_r(1.2), 80);
    EXPECT_NEAR(entanglement_entropy(s, Bipartition{{"A"}, {"B"}}), 2.0164511508429315, 1e-11);
}

TEST(fock, tensor_layout_and_deficit) {
    auto sp = SqueezedParams::from_r(0.9);
    auto pair = two_mode_squeezed(sp, 6);
    auto s = tensor(pair, pair);
    ASSERT_EQ(s.mode_count(), 4);
    EXPECT_EQ(s.labels(), (std::vector<std::string>{"A1", "A2", "B1", "B2"}));
    EXPECT_EQ(s.size(), 7u * 7 * 7 * 7);
    EXPECT_TRUE(s.is_normalized());
    double d = pair.truncation_deficit();
    EXPECT_NEAR(s.truncation_deficit(), 1 - (1 - d) * (1 - d), 1e-15);
    auto a = pair.amplitude({2, 2}) * pair.amplitude({1, 1});
    EXPECT_NEAR(std::abs(s.amplitude({2, 1, 2, 1}) - a), 0.0, 1e-15);
    EXPECT_EQ(s.amplitude({2, 1, 1, 2}), cdouble(0));
}

TEST(fock, tensor_rejects_mismatch) {
    auto a = two_mode_squeezed(SqueezedParams::from_r(0.5), 3);
    auto b = two_mode_squeezed(SqueezedParams::from_r(0.5), 4);
    EXPECT_THROW(tensor(a, b), std::invalid_argument);
    auto four = tensor(a, a);
    EXPECT_THROW(tensor(four, four), std::invalid_argument);
}

TEST(fock, mode_index_and_flat_index) {
    MultiModeState s({"A1", "A2", "B1", "B2"}, 3);
    EXPECT_EQ(s.mode_index("B1"), 2);
    EXPECT_THROW(s.mode_index("C"), std::invalid_argument);
    std::vector<int> occ{1, 2, 3, 0};
    auto flat = s.flat_index(occ);
    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(s.occupation(flat, k), occ[k]);
    }
    std::vector<int> bad{1, 2, 4, 0};
    EXPECT_THROW(s.flat_index(bad), std::out_of_range);
    EXPECT_THROW(MultiModeState({"A"}, 2), std::invalid_argument);
    EXPECT_THROW(MultiModeState({"A", "B", "C"}, 2), std::invalid_argument);
}

TEST(fock, normalized_zero_state_throws) {
    MultiModeState s({"A", "B"}, 2);
    EXPECT_THROW(s.normalized(), std::domain_error);
}

TEST(fock, annihilate_amplitudes) {
    MultiModeState s({"A", "B"}, 3);
    s.set_amplitude({2, 1}, 1.0);
    auto t = annihilate(s, "A");
    EXPECT_NEAR(t.amplitude({1, 1}).real(), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(t.norm_squared(), 2.0, 1e-15);
    auto v = annihilate(vacuum({"A", "B"}, 3), "B");
    EXPECT_EQ(v.norm_squared(), 0.0);
    EXPECT_THROW(annihilate(s, "Z"), std::invalid_argument);
}

TEST(fock, annihilate_norm_is_mean_photon_number) {
    auto sp = SqueezedParams::from_r(0.9);
    auto s = two_mode_squeezed(sp, 60);
    EXPECT_NEAR(annihilate(s, "A").norm_squared(), sp.mean_photon_number(), 1e-12);
}

TEST(fock, number_distribution_of_pair) {
    auto sp = SqueezedParams::from_r(0.9);
    auto s = two_mode_squeezed(sp, 40);
    std::vector<std::string> a{"A"};
    auto dist = total_number_distribution(s, a);
    ASSERT_EQ(dist.size(), 41u);
    double x = sp.lambda() * sp.lambda();
    for (int n = 0; n < 10; ++n) {
        EXPECT_NEAR(dist[n], (1 - x) * std::pow(x, n), 1e-12);
    }
    EXPECT_NEAR(std::accumulate(dist.begin(), dist.end(), 0.0), 1.0, 1e-12);
}

TEST(fock, projection_probability_matches_p_m) {
    auto sp = SqueezedParams::from_r(0.9);
    auto s = two_pair_state(sp, 15);
    for (int m = 0; m <= 15; ++m) {
        auto proj = project_total_number(s, kBob, m);
        EXPECT_NEAR(proj.probability * s.retained_weight(), p_m(sp, m), 1e-12) << m;
        ASSERT_TRUE(proj.state);
        EXPECT_TRUE(proj.state->is_normalized());
    }
    EXPECT_THROW(project_total_number(s, kBob, -1), std::domain_error);
    EXPECT_THROW(project_total_number(s, kBob, 31), std::domain_error);
}

TEST(fock, projection_impossible_outcome) {
    auto s = two_pair_state(SqueezedParams::from_r(0.5), 3);
    auto joint = project_joint_number(s, kAlice, 2, kBob, 1);
    EXPECT_LT(joint.probability, kImpossibleOutcome);
    EXPECT_FALSE(joint.state);
}

TEST(fock, joint_distribution_is_diagonal_for_pairs) {
    auto s = two_pair_state(SqueezedParams::from_r(0.9), 8);
    auto joint = joint_number_distribution(s, kAlice, kBob);
    double total = 0;
    for (std::size_t i = 0; i < joint.size(); ++i) {
        for (std::size_t j = 0; j < joint[i].size(); ++j) {
            total += joint[i][j];
            if (i != j) {
                EXPECT_EQ(joint[i][j], 0.0);
            }
        }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(fock, schmidt_of_product_state) {
    auto s = vacuum({"A", "B"}, 4);
    auto p = schmidt_probabilities(s, Bipartition{{"A"}, {"B"}});
    ASSERT_EQ(p.size(), 1u);
    EXPECT_NEAR(p[0], 1.0, 1e-15);
}

TEST(fock, bipartition_validation) {
    auto s = two_pair_state(SqueezedParams::from_r(0.5), 2);
    EXPECT_THROW(schmidt_probabilities(s, Bipartition{{"A1"}, {"B1"}}), std::invalid_argument);
    EXPECT_THROW(schmidt_probabilities(s, Bipartition{{"A1", "A2", "B1"}, {"B1", "B2"}}), std::invalid_argument);
    EXPECT_NO_THROW(schmidt_probabilities(s, alice_bob_cut()));
    EXPECT_NO_THROW(schmidt_probabilities(s, Bipartition{{"A1", "B1"}, {"A2", "B2"}}));
}

TEST(fock, two_pair_entropy_is_additive) {
    for (double r : {0.3, 0.6}) {
        auto sp = SqueezedParams::from_r(r);
        auto s = two_pair_state(sp, 20);
        EXPECT_NEAR(entanglement_entropy(s, alice_bob_cut()), 2 * squeezed_pair_entropy(sp), 1e-6);
        // The pairs themselves are unentangled with each other.
        EXPECT_NEAR(entanglement_entropy(s, Bipartition{{"A1", "B1"}, {"A2", "B2"}}), 0.0, 1e-9);
    }
}

TEST(fock, ideal_m_state_entropy) {
    for (int m = 0; m <= 8; ++m) {
        auto s = ideal_m_state(m, 8);
        EXPECT_TRUE(s.is_normalized());
        EXPECT_NEAR(entanglement_entropy(s, alice_bob_cut()), std::log1p(m), 1e-12) << m;
    }
    EXPECT_THROW(ideal_m_state(-1, 4), std::invalid_argument);
    EXPECT_THROW(ideal_m_state(9, 4), std::invalid_argument);
    // Beyond n_max only the representable terms remain.
    EXPECT_NEAR(entanglement_entropy(ideal_m_state(6, 4), alice_bob_cut()), std::log(3.0), 1e-12);
}

TEST(fock, fidelity_basics) {
    auto a = ideal_m_state(3, 5);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-14);
    EXPECT_NEAR(fidelity(a, ideal_m_state(2, 5)), 0.0, 1e-15);
    EXPECT_THROW(fidelity(a, ideal_m_state(3, 4)), std::invalid_argument);
}

TEST(fock, property_norm_and_entropy_bounds) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n_max = 1 + trial % 3;
        auto s = random_state(rng, {"A1", "A2", "B1", "B2"}, n_max);
        EXPECT_TRUE(s.is_normalized());
        auto p = schmidt_probabilities(s, alice_bob_cut());
        double total = std::accumulate(p.begin(), p.end(), 0.0);
        EXPECT_NEAR(total, 1.0, 1e-12);
        for (std::size_t i = 1; i < p.size(); ++i) {
            EXPECT_LE(p[i], p[i - 1] + 1e-15);
        }
        double e = entanglement_entropy(s, alice_bob_cut());
        int dim = (n_max + 1) * (n_max + 1);
        EXPECT_GE(e, -1e-12);
        EXPECT_LE(e, std::log(static_cast<double>(dim)) + 1e-12);
        // Entropy is symmetric under swapping the sides.
        EXPECT_NEAR(e, entanglement_entropy(s, Bipartition{{"B1", "B2"}, {"A1", "A2"}}), 1e-10);
    }
}

TEST(fock, property_projections_partition_probability) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_state(rng, {"A1", "A2", "B1", "B2"}, 2);
        double total = 0;
        for (int m = 0; m <= 4; ++m) {
            total += project_total_number(s, kBob, m).probability;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        auto joint = joint_number_distribution(s, kAlice, kBob);
        auto marginal = total_number_distribution(s, kBob);
        for (std::size_t j = 0; j < marginal.size(); ++j) {
            double col = 0;
            for (const auto &row : joint) {
                col += row[j];
            }
            EXPECT_NEAR(col, marginal[j], 1e-12);
        }
    }
}

TEST(fock, property_fidelity_bounds) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_state(rng, {"A", "B"}, 4);
        auto b = random_state(rng, {"A", "B"}, 4);
        double f = fidelity(a, b);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0 + 1e-12);
        EXPECT_NEAR(f, fidelity(b, a), 1e-12);
    }
}
