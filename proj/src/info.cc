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

#include <algorithm>
#include <cmath>
#include <string>

#include "privcap/error.h"

namespace privcap {
namespace {

constexpr double kNegativeEigenvalueFloor = -1e-10;

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

// Pushes every ensemble member through `c` and regroups by the processed
// variable T.
void processed_ensemble(const Channel &c, const CQEnsemble &e, std::vector<double> &pt,
                        std::vector<DensityMatrix> &states) {
    const std::size_t nx = e.probs.size();
    std::vector<Matrix> outputs;
    outputs.reserve(nx);
    for (const auto &s : e.states) {
        outputs.push_back(apply(c, s).matrix());
    }
    const std::size_t nt = e.processing ? static_cast<std::size_t>(e.processing->rows()) : nx;
    pt.clear();
    states.clear();
    for (std::size_t t = 0; t < nt; ++t) {
        double weight = 0.0;
        Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(c.dout()), static_cast<Eigen::Index>(c.dout()));
        for (std::size_t x = 0; x < nx; ++x) {
            double ptx = e.processing ? (*e.processing)(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(x))
                                      : (t == x ? 1.0 : 0.0);
            double w = ptx * e.probs[x];
            if (w <= 0.0) {
                continue;
            }
            weight += w;
            acc += w * outputs[x];
        }
        if (weight <= 0.0) {
            continue;
        }
        pt.push_back(weight);
        states.push_back(DensityMatrix::unchecked(acc / weight));
    }
}

}  // namespace

void validate_ensemble(const CQEnsemble &e, double tol) {
    if (e.probs.empty() || e.probs.size() != e.states.size()) {
        throw Error(ErrorCode::BadDistribution, "ensemble needs one probability per state");
    }
    double total = 0.0;
    for (double p : e.probs) {
        if (!(p >= 0.0)) {
            throw Error(ErrorCode::BadDistribution, "negative ensemble probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > tol) {
        throw Error(ErrorCode::BadDistribution, "ensemble probabilities sum to " + std::to_string(total));
    }
    for (const auto &s : e.states) {
        if (s.dim() != e.states.front().dim()) {
            throw Error(ErrorCode::DimensionMismatch, "ensemble states have differing dimensions");
        }
    }
    if (e.processing) {
        const auto &p = *e.processing;
        if (p.cols() != static_cast<Eigen::Index>(e.probs.size()) || p.rows() == 0) {
            throw Error(ErrorCode::DimensionMismatch, "processing matrix must have one column per ensemble member");
        }
        if (p.minCoeff() < 0.0) {
            throw Error(ErrorCode::BadDistribution, "processing matrix has a negative entry");
        }
        for (Eigen::Index x = 0; x < p.cols(); ++x) {
            if (std::abs(p.col(x).sum() - 1.0) > tol) {
                throw Error(ErrorCode::BadDistribution, "processing column " + std::to_string(x) + " does not sum to 1");
            }
        }
    }
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::ParamOutOfRange, "binary entropy argument must lie in [0, 1]");
    }
    return -xlog2x(p) - xlog2x(1.0 - p);
}

double entropy_of_spectrum(const RealVector &eigenvalues) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        double lambda = eigenvalues(i);
        if (lambda < kNegativeEigenvalueFloor) {
            throw Error(ErrorCode::NotAState, "eigenvalue " + std::to_string(lambda) + " is negative");
        }
        s -= xlog2x(std::clamp(lambda, 0.0, 1.0));
    }
    return s;
}

double entropy(const DensityMatrix &rho) {
    return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()));
}

double coherent_information(const Channel &c, const Channel &complement, const DensityMatrix &rho) {
    return entropy(apply(c, rho)) - entropy(apply(complement, rho));
}

double coherent_information(const Channel &c, const DensityMatrix &rho) {
    return coherent_information(c, complementary(c), rho);
}

double cq_mutual_information(const std::vector<double> &probs, const std::vector<DensityMatrix> &states) {
    if (probs.empty() || probs.size() != states.size()) {
        throw Error(ErrorCode::BadDistribution, "need one probability per state");
    }
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) {
            throw Error(ErrorCode::BadDistribution, "negative probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kStructuralTol) {
        throw Error(ErrorCode::BadDistribution, "probabilities sum to " + std::to_string(total));
    }
    const auto dim = static_cast<Eigen::Index>(states.front().dim());
    Matrix average = Matrix::Zero(dim, dim);
    double conditional = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x) {
        if (states[x].dim() != states.front().dim()) {
            throw Error(ErrorCode::DimensionMismatch, "states have differing dimensions");
        }
        if (probs[x] == 0.0) {
            continue;
        }
        average += probs[x] * states[x].matrix();
        conditional += probs[x] * entropy(states[x]);
    }
    return entropy(DensityMatrix::unchecked(average)) - conditional;
}

double private_information(const Channel &c, const CQEnsemble &e) {
    validate_ensemble(e);
    if (e.states.front().dim() != c.din()) {
        throw Error(ErrorCode::DimensionMismatch, "ensemble dimension does not match channel input");
    }
    const Channel env = complementary(c);
    std::vector<double> pt_b, pt_e;
    std::vector<DensityMatrix> states_b, states_e;
    processed_ensemble(c, e, pt_b, states_b);
    processed_ensemble(env, e, pt_e, states_e);
    return cq_mutual_information(pt_b, states_b) - cq_mutual_information(pt_e, states_e);
}

double ss_private_info_estimate(const Channel &c, std::size_t d, const CQEnsemble &e, const Limits &limits) {
    return private_information(tensor(c, make_symmetric(d, limits), limits), e);
}

}  // namespace privcap
