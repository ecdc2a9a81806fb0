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

#include "privcap/linalg.h"

#include <cmath>

namespace privcap {

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

RealVector hermitian_eigenvalues(const Matrix &m) {
    Matrix h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double trace_norm_hermitian(const Matrix &m) {
    return hermitian_eigenvalues(m).cwiseAbs().sum();
}

double hermiticity_defect(const Matrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix partial_trace_first(const Matrix &m, std::size_t d1, std::size_t d2) {
    const auto n2 = static_cast<Eigen::Index>(d2);
    Matrix out = Matrix::Zero(n2, n2);
    for (std::size_t i = 0; i < d1; ++i) {
        const auto off = static_cast<Eigen::Index>(i) * n2;
        out += m.block(off, off, n2, n2);
    }
    return out;
}

Matrix partial_trace_second(const Matrix &m, std::size_t d1, std::size_t d2) {
    const auto n1 = static_cast<Eigen::Index>(d1);
    const auto n2 = static_cast<Eigen::Index>(d2);
    Matrix out(n1, n1);
    for (Eigen::Index i = 0; i < n1; ++i) {
        for (Eigen::Index j = 0; j < n1; ++j) {
            out(i, j) = m.block(i * n2, j * n2, n2, n2).trace();
        }
    }
    return out;
}

bool is_unitary(const Matrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    Matrix defect = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return defect.cwiseAbs().maxCoeff() <= tol;
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix basis_projector(std::size_t d, std::size_t i) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    return m;
}

Vector basis_ket(std::size_t d, std::size_t i) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(i)) = 1.0;
    return v;
}

}  // namespace privcap
