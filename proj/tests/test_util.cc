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

#include "test_util.h"

#include <cmath>

namespace privcap::tu {

Matrix random_gaussian(std::size_t rows, std::size_t cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    return m;
}

Matrix random_unitary(std::size_t n, Rng &rng) {
    Eigen::HouseholderQR<Matrix> qr(random_gaussian(n, n, rng));
    return qr.householderQ() * Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

Vector random_pure(std::size_t n, Rng &rng) {
    Vector v = random_gaussian(n, 1, rng).col(0);
    return v / v.norm();
}

DensityMatrix random_state(std::size_t n, Rng &rng) {
    Matrix g = random_gaussian(n, n, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix::from_matrix((rho + rho.adjoint()) * 0.5);
}

Channel random_channel(std::size_t din, std::size_t dout, std::size_t kraus, Rng &rng) {
    Eigen::HouseholderQR<Matrix> qr(random_gaussian(dout * kraus, din, rng));
    Matrix v = qr.householderQ() *
               Matrix::Identity(static_cast<Eigen::Index>(dout * kraus), static_cast<Eigen::Index>(din));
    std::vector<Matrix> ks;
    for (std::size_t k = 0; k < kraus; ++k) {
        ks.push_back(v.block(static_cast<Eigen::Index>(k * dout), 0, static_cast<Eigen::Index>(dout),
                             static_cast<Eigen::Index>(din)));
    }
    return make_channel(std::move(ks));
}

double oracle_h2(double p) {
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return -(p * std::log(p) + (1.0 - p) * std::log(1.0 - p)) / std::log(2.0);
}

double oracle_grid_max(const std::function<double(double)> &f, int points) {
    double best = -INFINITY;
    for (int i = 0; i < points; ++i) {
        best = std::max(best, f(static_cast<double>(i) / (points - 1)));
    }
    return best;
}

Matrix oracle_choi(const std::vector<Matrix> &kraus) {
    const Eigen::Index din = kraus.front().cols();
    const Eigen::Index dout = kraus.front().rows();
    Matrix j = Matrix::Zero(din * dout, din * dout);
    for (Eigen::Index a = 0; a < din; ++a) {
        for (Eigen::Index b = 0; b < din; ++b) {
            Matrix block = Matrix::Zero(dout, dout);
            for (const auto &k : kraus) {
                block += k.col(a) * k.col(b).adjoint();
            }
            j.block(a * dout, b * dout, dout, dout) = block / static_cast<double>(din);
        }
    }
    return j;
}

double oracle_entropy(const Matrix &rho) {
    Eigen::ComplexEigenSolver<Matrix> solver(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double lambda = solver.eigenvalues()(i).real();
        if (lambda > 1e-300) {
            s -= lambda * std::log(lambda) / std::log(2.0);
        }
    }
    return s;
}

CQEnsemble random_ensemble(std::size_t dim, int states, int outputs, Rng &rng) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    CQEnsemble e;
    double total = 0.0;
    for (int x = 0; x < states; ++x) {
        e.probs.push_back(u(rng));
        total += e.probs.back();
        if (x % 2 == 0) {
            e.states.push_back(DensityMatrix::pure(random_pure(dim, rng)));
        } else {
            e.states.push_back(random_state(dim, rng));
        }
    }
    for (auto &p : e.probs) {
        p /= total;
    }
    Eigen::MatrixXd processing(outputs, states);
    for (int x = 0; x < states; ++x) {
        for (int t = 0; t < outputs; ++t) {
            processing(t, x) = u(rng);
        }
        processing.col(x) /= processing.col(x).sum();
    }
    e.processing = processing;
    return e;
}

}  // namespace privcap::tu
