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

#ifndef PRIVCAP_INFO_H
#define PRIVCAP_INFO_H

#include <cstddef>
#include <optional>
#include <vector>

#include "privcap/channel.h"

namespace privcap {

/// Classical-quantum ensemble {p_x, φ_x} with optional stochastic processing
/// P(t|x) (rows t, columns x). No processing means T = X.
struct CQEnsemble {
    std::vector<double> probs;
    std::vector<DensityMatrix> states;
    std::optional<Eigen::MatrixXd> processing;
};

/// Throws BadDistribution or DimensionMismatch.
void validate_ensemble(const CQEnsemble &e, double tol = kStructuralTol);

/// All entropies are in bits.
double binary_entropy(double p);

/// Eigenvalues below −1e-10 raise NotAState; smaller negatives are floored.
double entropy(const DensityMatrix &rho);
double entropy_of_spectrum(const RealVector &eigenvalues);

/// S(N(ρ)) − S(N̂(ρ)).
double coherent_information(const Channel &c, const DensityMatrix &rho);
/// Same, with the complementary channel supplied by the caller.
double coherent_information(const Channel &c, const Channel &complement, const DensityMatrix &rho);

/// Holevo quantity S(Σ p_x ρ_x) − Σ p_x S(ρ_x).
double cq_mutual_information(const std::vector<double> &probs, const std::vector<DensityMatrix> &states);

/// I(T;B) − I(T;E) for the ensemble pushed through the channel and its
/// complement.
double private_information(const Channel &c, const CQEnsemble &e);

/// Private information of c ⊗ A_d for one fixed side-channel dimension d.
/// This only witnesses a lower bound on the side-channel assisted quantity.
double ss_private_info_estimate(const Channel &c, std::size_t d, const CQEnsemble &e, const Limits &limits = {});

}  // namespace privcap

#endif
