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

#ifndef PRIVCAP_LINALG_H
#define PRIVCAP_LINALG_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace privcap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Kronecker product a ⊗ b. The first factor indexes the slow (outer) block.
Matrix kron(const Matrix &a, const Matrix &b);

/// Eigenvalues of the Hermitian part of m, ascending.
RealVector hermitian_eigenvalues(const Matrix &m);

/// Trace norm of a Hermitian matrix (sum of absolute eigenvalues).
double trace_norm_hermitian(const Matrix &m);

/// max |m - m^dagger| over entries.
double hermiticity_defect(const Matrix &m);

/// Partial traces on a bipartite operator over C^{d1} ⊗ C^{d2}.
Matrix partial_trace_first(const Matrix &m, std::size_t d1, std::size_t d2);
Matrix partial_trace_second(const Matrix &m, std::size_t d1, std::size_t d2);

bool is_unitary(const Matrix &u, double tol = 1e-10);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// |i><i| in dimension d.
Matrix basis_projector(std::size_t d, std::size_t i);
Vector basis_ket(std::size_t d, std::size_t i);

}  // namespace privcap

#endif
