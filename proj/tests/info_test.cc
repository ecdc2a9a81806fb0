// Copyright 2026 The privcap Authors
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

#include "privcap/info.h"

#include <gtest/gtest.h>

#include <cmath>

#include "privcap/capacity.h"
#include "privcap/error.h"
#include "test_util.h"

using namespace privcap;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::BadSpec;
}

Vector ket(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

Eigen::MatrixXd identity_processing(int n) {
    return Eigen::MatrixXd::Identity(n, n);
}

using tu::random_ensemble;

}  // namespace

// ---------------------------------------------------------------------------
// entropy

TEST(binary_entropy, values) {
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
    EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
    EXPECT_NEAR(binary_entropy(0.1), 0.4689955935892812, 1e-15);
    for (double p : {0.01, 0.2, 0.37, 0.8}) {
        EXPECT_NEAR(binary_entropy(p), tu::oracle_h2(p), 1e-14);
    }
}

TEST(entropy, pure_state_is_zero) {
    tu::Rng rng(1);
    EXPECT_NEAR(entropy(DensityMatrix::pure(tu::random_pure(3, rng))), 0.0, 1e-9);
}

TEST(entropy, maximally_mixed) {
    for (std::size_t d : {2u, 3u, 4u, 7u}) {
        EXPECT_NEAR(entropy(DensityMatrix::maximally_mixed(d)), std::log2(static_cast<double>(d)), 1e-12);
    }
}

TEST(entropy, diagonal) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 0.9;
    m(1, 1) = 0.1;
    EXPECT_NEAR(entropy(DensityMatrix::from_matrix(m)), 0.468996, 1e-6);
}

TEST(entropy, matches_oracle_and_unitary_invariance) {
    tu::Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        DensityMatrix rho = tu::random_state(4, rng);
        Matrix u = tu::random_unitary(4, rng);
        const double s = entropy(rho);
        EXPECT_NEAR(s, tu::oracle_entropy(rho.matrix()), 1e-10);
        EXPECT_NEAR(entropy(DensityMatrix::unchecked(u * rho.matrix() * u.adjoint())), s, 1e-10);
    }
}

TEST(entropy_of_spectrum, clamping_policy) {
    RealVector tiny(2);
    tiny << 1.0 + 5e-11, -5e-11;
    EXPECT_NEAR(entropy_of_spectrum(tiny), 0.0, 1e-9);
    RealVector negative(2);
    negative << 1.1, -0.1;
    EXPECT_EQ(code_of([&] { entropy_of_spectrum(negative); }), ErrorCode::NotAState);
}

// ---------------------------------------------------------------------------
// coherent_information

TEST(coherent_information, identity_qubit) {
    EXPECT_NEAR(coherent_information(make_identity(2), DensityMatrix::maximally_mixed(2)), 1.0, 1e-12);
}

TEST(coherent_information, half_damping_vanishes) {
    tu::Rng rng(3);
    Channel c = make_amplitude_damping(0.5);
    for (int i = 0; i < 50; ++i) {
        EXPECT_NEAR(coherent_information(c, tu::random_state(2, rng)), 0.0, 1e-9);
    }
}

TEST(coherent_information, symmetric_channel_nonpositive) {
    tu::Rng rng(4);
    Channel a = make_symmetric(2);
    for (int i = 0; i < 200; ++i) {
        EXPECT_LE(coherent_information(a, tu::random_state(3, rng)), 1e-9);
    }
}

TEST(coherent_information, bounded_and_antisymmetric_under_complement) {
    tu::Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Channel c = tu::random_channel(3, 2, 3, rng);
        Channel env = complementary(c);
        DensityMatrix rho = tu::random_state(3, rng);
        const double ic = coherent_information(c, rho);
        EXPECT_LE(ic, 1.0 + 1e-12);
        EXPECT_NEAR(ic, -coherent_information(env, c, rho), 1e-9);
        EXPECT_NEAR(ic, coherent_information(c, env, rho), 1e-12);
    }
}

TEST(coherent_information, dimension_mismatch) {
    EXPECT_EQ(code_of([] { coherent_information(make_identity(2), DensityMatrix::maximally_mixed(3)); }),
              ErrorCode::DimensionMismatch);
}

// ---------------------------------------------------------------------------
// cq_mutual_information

TEST(cq_mutual_information, identical_states) {
    tu::Rng rng(6);
    DensityMatrix rho = tu::random_state(2, rng);
    EXPECT_NEAR(cq_mutual_information({0.3, 0.7}, {rho, rho}), 0.0, 1e-12);
}

TEST(cq_mutual_information, orthogonal_pure_states) {
    EXPECT_NEAR(cq_mutual_information({0.5, 0.5}, {DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)}), 1.0,
                1e-12);
}

TEST(cq_mutual_information, zero_and_plus) {
    const double s = 1.0 / std::sqrt(2.0);
    double value = cq_mutual_information({0.5, 0.5}, {DensityMatrix::pure(ket(1, 0)), DensityMatrix::pure(ket(s, s))});
    // Pure states: the Holevo quantity is S of the average, H((1+1/√2)/2).
    EXPECT_NEAR(value, 0.60087603669285616, 1e-12);
    Matrix avg = 0.5 * DensityMatrix::pure(ket(1, 0)).matrix() + 0.5 * DensityMatrix::pure(ket(s, s)).matrix();
    EXPECT_NEAR(value, tu::oracle_entropy(avg), 1e-12);
}

TEST(cq_mutual_information, bad_distribution) {
    DensityMatrix r = DensityMatrix::maximally_mixed(2);
    EXPECT_EQ(code_of([&] { cq_mutual_information({0.5, 0.6}, {r, r}); }), ErrorCode::BadDistribution);
    EXPECT_EQ(code_of([&] { cq_mutual_information({-0.5, 1.5}, {r, r}); }), ErrorCode::BadDistribution);
    EXPECT_EQ(code_of([&] { cq_mutual_information({1.0}, {r, r}); }), ErrorCode::BadDistribution);
    EXPECT_EQ(code_of([&] { cq_mutual_information({0.5, 0.5}, {r, DensityMatrix::maximally_mixed(3)}); }),
              ErrorCode::DimensionMismatch);
}

// ---------------------------------------------------------------------------
// private_information

TEST(private_information, identity_channel_basis_ensemble) {
    CQEnsemble e{{0.5, 0.5}, {DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)}, identity_processing(2)};
    EXPECT_NEAR(private_information(make_identity(2), e), 1.0, 1e-12);
}

TEST(private_information, damping_at_optimizer_matches_closed_form) {
    OptResult f = f_amp(0.3);
    const double t = f.argument;
    CQEnsemble e{{1.0 - t, t}, {DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)}, identity_processing(2)};
    EXPECT_NEAR(private_information(make_amplitude_damping(0.3), e), f.value, 1e-6);
}

TEST(private_information, constant_processing_is_zero) {
    tu::Rng rng(7);
    CQEnsemble e = random_ensemble(2, 3, 1, rng);
    e.processing = Eigen::MatrixXd::Ones(1, 3);
    EXPECT_NEAR(private_information(tu::random_channel(2, 2, 3, rng), e), 0.0, 1e-12);
}

TEST(private_information, missing_processing_means_identity) {
    tu::Rng rng(8);
    CQEnsemble e = random_ensemble(2, 3, 3, rng);
    Channel c = make_amplitude_damping(0.2);
    CQEnsemble id = e;
    id.processing = identity_processing(3);
    CQEnsemble none = e;
    none.processing.reset();
    EXPECT_NEAR(private_information(c, id), private_information(c, none), 1e-14);
}

TEST(private_information, errors) {
    CQEnsemble e{{0.5, 0.5}, {DensityMatrix::basis(3, 0), DensityMatrix::basis(3, 1)}, std::nullopt};
    EXPECT_EQ(code_of([&] { private_information(make_identity(2), e); }), ErrorCode::DimensionMismatch);
    CQEnsemble bad{{0.5, 0.5}, {DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)}, Eigen::MatrixXd::Ones(2, 2)};
    EXPECT_EQ(code_of([&] { private_information(make_identity(2), bad); }), ErrorCode::BadDistribution);
}

TEST(private_information, bounded_by_unprocessed_holevo) {
    tu::Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        Channel c = tu::random_channel(2, 2, 2, rng);
        CQEnsemble e = random_ensemble(2, 4, 3, rng);
        std::vector<DensityMatrix> outs;
        for (const auto &s : e.states) {
            outs.push_back(apply(c, s));
        }
        EXPECT_LE(private_information(c, e), cq_mutual_information(e.probs, outs) + 1e-9);
    }
}

class NoisyProcessingSuite : public ::testing::TestWithParam<double> {};

TEST_P(NoisyProcessingSuite, never_beats_degradable_optimum) {
    const double gamma = GetParam();
    const double bound = f_amp(gamma).value;
    Channel c = make_amplitude_damping(gamma);
    tu::Rng rng(static_cast<std::uint64_t>(gamma * 1000));
    std::uniform_int_distribution<int> count(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        CQEnsemble e = random_ensemble(2, count(rng), count(rng), rng);
        EXPECT_LE(private_information(c, e), bound + 1e-6);
    }
}

INSTANTIATE_TEST_SUITE_P(damping, NoisyProcessingSuite, ::testing::Values(0.1, 0.3));

// ---------------------------------------------------------------------------
// ss_private_info_estimate

TEST(ss_private_info_estimate, unused_side_channel) {
    tu::Rng rng(10);
    Channel c = make_amplitude_damping(0.2);
    DensityMatrix sigma = tu::random_state(3, rng);
    CQEnsemble marginal = random_ensemble(2, 3, 2, rng);
    CQEnsemble joint = marginal;
    for (auto &s : joint.states) {
        s = tensor(s, sigma);
    }
    EXPECT_NEAR(ss_private_info_estimate(c, 2, joint), private_information(c, marginal), 1e-9);
}

TEST(ss_private_info_estimate, identity_capped_by_one) {
    tu::Rng rng(11);
    Channel c = make_identity(2);
    for (int trial = 0; trial < 50; ++trial) {
        CQEnsemble e = random_ensemble(6, 4, 4, rng);
        EXPECT_LE(ss_private_info_estimate(c, 2, e), 1.0 + 1e-9);
    }
}

TEST(ss_private_info_estimate, constant_processing) {
    tu::Rng rng(12);
    CQEnsemble e = random_ensemble(6, 3, 1, rng);
    EXPECT_NEAR(ss_private_info_estimate(make_amplitude_damping(0.1), 2, e), 0.0, 1e-12);
}

TEST(ss_private_info_estimate, dimension_mismatch) {
    CQEnsemble e{{1.0}, {DensityMatrix::maximally_mixed(2)}, std::nullopt};
    EXPECT_EQ(code_of([&] { ss_private_info_estimate(make_identity(2), 2, e); }), ErrorCode::DimensionMismatch);
}
