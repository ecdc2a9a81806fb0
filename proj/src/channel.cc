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

#include "privcap/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "privcap/error.h"

namespace privcap {
namespace {

Eigen::Index idx(std::size_t n) {
    return static_cast<Eigen::Index>(n);
}

void require_unit_interval(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::ParamOutOfRange, std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

Matrix hermitize(const Matrix &m) {
    return (m + m.adjoint()) * 0.5;
}

}  // namespace

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix DensityMatrix::from_matrix(Matrix m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorCode::NotAState, "density matrix must be square and non-empty");
    }
    if (hermiticity_defect(m) > 1e-12) {
        throw Error(ErrorCode::NotAState, "matrix is not Hermitian");
    }
    m = hermitize(m);
    double trace = m.trace().real();
    if (std::abs(trace - 1.0) > tol) {
        throw Error(ErrorCode::NotAState, "trace is " + std::to_string(trace));
    }
    double min_eig = hermitian_eigenvalues(m).minCoeff();
    if (min_eig < -tol) {
        throw Error(ErrorCode::NotAState, "negative eigenvalue " + std::to_string(min_eig));
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::unchecked(Matrix m) {
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(Matrix::Identity(idx(dim), idx(dim)) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const Vector &psi) {
    double norm = psi.norm();
    if (norm == 0.0) {
        throw Error(ErrorCode::NotAState, "zero state vector");
    }
    Vector v = psi / norm;
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    }
    return DensityMatrix(basis_projector(dim, index));
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix::unchecked(kron(a.matrix(), b.matrix()));
}

// ---------------------------------------------------------------------------
// Channel construction

Channel Channel::with_family(Family family) const {
    Channel out = *this;
    out.family_ = std::move(family);
    return out;
}

Channel Channel::without_family() const {
    Channel out = *this;
    out.family_.reset();
    return out;
}

double completeness_residual(const std::vector<Matrix> &kraus) {
    if (kraus.empty()) {
        return INFINITY;
    }
    Matrix sum = Matrix::Zero(kraus.front().cols(), kraus.front().cols());
    for (const auto &k : kraus) {
        sum += k.adjoint() * k;
    }
    sum -= Matrix::Identity(sum.rows(), sum.cols());
    return sum.cwiseAbs().maxCoeff();
}

Channel make_channel_unchecked(std::vector<Matrix> kraus) {
    if (kraus.empty()) {
        throw Error(ErrorCode::ShapeMismatch, "a channel needs at least one Kraus operator");
    }
    const auto rows = kraus.front().rows();
    const auto cols = kraus.front().cols();
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::ShapeMismatch, "Kraus operators must be non-empty");
    }
    for (const auto &k : kraus) {
        if (k.rows() != rows || k.cols() != cols) {
            throw Error(ErrorCode::ShapeMismatch, "Kraus operators have differing shapes");
        }
    }
    return Channel(static_cast<std::size_t>(cols), static_cast<std::size_t>(rows), std::move(kraus));
}

Channel make_channel(std::vector<Matrix> kraus, double tol) {
    Channel c = make_channel_unchecked(std::move(kraus));
    double residual = completeness_residual(c.kraus());
    if (!(residual <= tol)) {
        throw Error(ErrorCode::NotTracePreserving, "completeness residual " + std::to_string(residual));
    }
    return c;
}

Isometry isometric_extension(const Channel &c) {
    const std::size_t de = c.kraus_count();
    Matrix v(idx(c.dout() * de), idx(c.din()));
    for (std::size_t k = 0; k < de; ++k) {
        const Matrix &kk = c.kraus()[k];
        for (std::size_t b = 0; b < c.dout(); ++b) {
            v.row(idx(b * de + k)) = kk.row(idx(b));
        }
    }
    return Isometry{c.din(), c.dout(), de, std::move(v)};
}

Channel complementary(const Channel &c) {
    const std::size_t de = c.kraus_count();
    std::vector<Matrix> env;
    env.reserve(c.dout());
    for (std::size_t b = 0; b < c.dout(); ++b) {
        Matrix f(idx(de), idx(c.din()));
        for (std::size_t k = 0; k < de; ++k) {
            f.row(idx(k)) = c.kraus()[k].row(idx(b));
        }
        env.push_back(std::move(f));
    }
    return make_channel_unchecked(std::move(env));
}

Matrix apply_operator(const Channel &c, const Matrix &op) {
    if (op.rows() != idx(c.din()) || op.cols() != idx(c.din())) {
        throw Error(ErrorCode::DimensionMismatch, "operator dimension does not match channel input");
    }
    Matrix out = Matrix::Zero(idx(c.dout()), idx(c.dout()));
    for (const auto &k : c.kraus()) {
        out.noalias() += k * op * k.adjoint();
    }
    return out;
}

DensityMatrix apply(const Channel &c, const DensityMatrix &rho) {
    if (rho.dim() != c.din()) {
        throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                                      " does not match channel input " + std::to_string(c.din()));
    }
    return DensityMatrix::unchecked(hermitize(apply_operator(c, rho.matrix())));
}

Matrix trace_out_environment(const Isometry &v, const Matrix &rho) {
    Matrix full = v.matrix * rho * v.matrix.adjoint();
    return partial_trace_second(full, v.dout_b, v.dout_e);
}

Matrix trace_out_receiver(const Isometry &v, const Matrix &rho) {
    Matrix full = v.matrix * rho * v.matrix.adjoint();
    return partial_trace_first(full, v.dout_b, v.dout_e);
}

// ---------------------------------------------------------------------------
// Choi representation

ChoiMatrix choi(const Channel &c) {
    const std::size_t n = c.din() * c.dout();
    Matrix j = Matrix::Zero(idx(n), idx(n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(c.din()));
    Vector v(idx(n));
    for (const auto &k : c.kraus()) {
        for (std::size_t i = 0; i < c.din(); ++i) {
            v.segment(idx(i * c.dout()), idx(c.dout())) = k.col(idx(i)) * scale;
        }
        j.noalias() += v * v.adjoint();
    }
    return ChoiMatrix{c.din(), c.dout(), std::move(j)};
}

std::vector<Matrix> kraus_from_choi(const ChoiMatrix &j, double cutoff) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(j.matrix));
    std::vector<Matrix> kraus;
    const RealVector &vals = solver.eigenvalues();
    // Largest eigenvalues first so the dominant operator leads.
    for (Eigen::Index e = vals.size() - 1; e >= 0; --e) {
        if (vals(e) <= cutoff) {
            continue;
        }
        const double scale = std::sqrt(vals(e) * static_cast<double>(j.din));
        Matrix k(idx(j.dout), idx(j.din));
        for (std::size_t i = 0; i < j.din; ++i) {
            k.col(idx(i)) = solver.eigenvectors().col(e).segment(idx(i * j.dout), idx(j.dout)) * scale;
        }
        kraus.push_back(std::move(k));
    }
    return kraus;
}

Channel minimize_kraus(const Channel &c, double cutoff) {
    // Drop zero operators; keep the rest verbatim when already independent.
    const double scale = 1.0 / static_cast<double>(c.din());
    std::vector<Matrix> kept;
    for (const auto &k : c.kraus()) {
        if (k.squaredNorm() * scale > cutoff) {
            kept.push_back(k);
        }
    }
    if (!kept.empty()) {
        const auto n = static_cast<Eigen::Index>(kept.size());
        Matrix gram(n, n);
        for (Eigen::Index a = 0; a < n; ++a) {
            for (Eigen::Index b = 0; b < n; ++b) {
                gram(a, b) = (kept[static_cast<std::size_t>(a)].adjoint() * kept[static_cast<std::size_t>(b)])
                                 .trace() *
                             scale;
            }
        }
        if (hermitian_eigenvalues(gram).minCoeff() > cutoff) {
            Channel out = make_channel_unchecked(std::move(kept));
            return c.family() ? out.with_family(*c.family()) : out;
        }
    }
    auto kraus = kraus_from_choi(choi(c), cutoff);
    if (kraus.empty()) {
        throw Error(ErrorCode::NotTracePreserving, "Choi matrix has no eigenvalue above the cutoff");
    }
    Channel out = make_channel_unchecked(std::move(kraus));
    if (c.family()) {
        out = out.with_family(*c.family());
    }
    return out;
}

double choi_distance(const ChoiMatrix &a, const ChoiMatrix &b) {
    if (a.din != b.din || a.dout != b.dout) {
        throw Error(ErrorCode::DimensionMismatch, "Choi matrices have different dimensions");
    }
    return trace_norm_hermitian(a.matrix - b.matrix);
}

double choi_distance(const Channel &a, const Channel &b) {
    return choi_distance(choi(a), choi(b));
}

// ---------------------------------------------------------------------------
// Combinators

Channel tensor(const Channel &a, const Channel &b, const Limits &limits) {
    if (a.kraus_count() * b.kraus_count() > limits.max_kraus) {
        throw Error(ErrorCode::KrausBlowup, "tensor product would have " +
                                                std::to_string(a.kraus_count() * b.kraus_count()) + " Kraus operators");
    }
    std::vector<Matrix> kraus;
    kraus.reserve(a.kraus_count() * b.kraus_count());
    for (const auto &ka : a.kraus()) {
        for (const auto &kb : b.kraus()) {
            kraus.push_back(kron(ka, kb));
        }
    }
    return make_channel_unchecked(std::move(kraus));
}

Channel compose(const Channel &after, const Channel &before, const Limits &limits) {
    if (after.din() != before.dout()) {
        throw Error(ErrorCode::DimensionMismatch, "compose: after.din = " + std::to_string(after.din()) +
                                                      " but before.dout = " + std::to_string(before.dout()));
    }
    if (after.kraus_count() * before.kraus_count() > limits.max_kraus) {
        throw Error(ErrorCode::KrausBlowup, "composition would have " +
                                                std::to_string(after.kraus_count() * before.kraus_count()) +
                                                " Kraus operators");
    }
    std::vector<Matrix> kraus;
    kraus.reserve(after.kraus_count() * before.kraus_count());
    for (const auto &ka : after.kraus()) {
        for (const auto &kb : before.kraus()) {
            kraus.push_back(ka * kb);
        }
    }
    return make_channel_unchecked(std::move(kraus));
}

Channel mixture(const std::vector<std::pair<double, Channel>> &parts, double tol) {
    if (parts.empty()) {
        throw Error(ErrorCode::BadDistribution, "mixture of zero channels");
    }
    double total = 0.0;
    for (const auto &[p, c] : parts) {
        if (!(p >= 0.0)) {
            throw Error(ErrorCode::BadDistribution, "negative mixture weight");
        }
        if (c.din() != parts.front().second.din() || c.dout() != parts.front().second.dout()) {
            throw Error(ErrorCode::DimensionMismatch, "mixture parts have differing dimensions");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > tol) {
        throw Error(ErrorCode::BadDistribution, "mixture weights sum to " + std::to_string(total));
    }
    std::vector<Matrix> kraus;
    for (const auto &[p, c] : parts) {
        const double s = std::sqrt(p);
        for (const auto &k : c.kraus()) {
            kraus.push_back(s * k);
        }
    }
    return make_channel_unchecked(std::move(kraus));
}

Channel conjugate(const Channel &c, const Matrix &pre_u, const Matrix &post_u, double tol) {
    if (pre_u.rows() != idx(c.din()) || post_u.rows() != idx(c.dout())) {
        throw Error(ErrorCode::DimensionMismatch, "conjugating unitaries do not match channel dimensions");
    }
    if (!is_unitary(pre_u, tol) || !is_unitary(post_u, tol)) {
        throw Error(ErrorCode::NotUnitary, "conjugation requires unitary matrices");
    }
    std::vector<Matrix> kraus;
    kraus.reserve(c.kraus_count());
    for (const auto &k : c.kraus()) {
        kraus.push_back(post_u * k * pre_u);
    }
    Channel out = make_channel_unchecked(std::move(kraus));
    if (c.family()) {
        Family f = *c.family();
        f.pre = f.pre.size() == 0 ? pre_u : Matrix(f.pre * pre_u);
        f.post = f.post.size() == 0 ? post_u : Matrix(post_u * f.post);
        out = out.with_family(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Families

Channel make_identity(std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorCode::ParamOutOfRange, "dimension must be positive");
    }
    return make_channel_unchecked({Matrix::Identity(idx(dim), idx(dim))})
        .with_family(Family{FamilyKind::Identity, {static_cast<double>(dim)}, {}, {}});
}

Channel make_replacement(std::size_t din, const DensityMatrix &sigma) {
    if (din == 0) {
        throw Error(ErrorCode::ParamOutOfRange, "dimension must be positive");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sigma.matrix());
    std::vector<Matrix> kraus;
    for (Eigen::Index e = 0; e < solver.eigenvalues().size(); ++e) {
        double lambda = solver.eigenvalues()(e);
        if (lambda <= 0.0) {
            continue;
        }
        Vector psi = solver.eigenvectors().col(e) * std::sqrt(lambda);
        for (std::size_t i = 0; i < din; ++i) {
            kraus.push_back(psi * basis_ket(din, i).adjoint());
        }
    }
    return make_channel_unchecked(std::move(kraus));
}

Channel make_two_kraus(double gamma, double delta) {
    require_unit_interval(gamma, "gamma");
    require_unit_interval(delta, "delta");
    // Basis ordered so that delta = 0 is amplitude damping |1⟩ → |0⟩ at rate gamma.
    Matrix a0 = Matrix::Zero(2, 2);
    a0(0, 0) = std::sqrt(1.0 - delta);
    a0(1, 1) = std::sqrt(1.0 - gamma);
    Matrix a1 = Matrix::Zero(2, 2);
    a1(0, 1) = std::sqrt(gamma);
    a1(1, 0) = std::sqrt(delta);
    return make_channel_unchecked({a0, a1}).with_family(Family{FamilyKind::TwoKraus, {gamma, delta}, {}, {}});
}

Channel make_amplitude_damping(double gamma) {
    require_unit_interval(gamma, "gamma");
    Matrix k0 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    return make_channel_unchecked({k0, k1}).with_family(Family{FamilyKind::AmplitudeDamping, {gamma}, {}, {}});
}

Channel make_pauli(double p1, double p2, double p3) {
    if (!(p1 >= 0.0 && p2 >= 0.0 && p3 >= 0.0) || p1 + p2 + p3 > 1.0 + 1e-12) {
        throw Error(ErrorCode::BadDistribution, "Pauli probabilities must be non-negative with sum at most 1");
    }
    const double p0 = std::max(0.0, 1.0 - p1 - p2 - p3);
    std::vector<Matrix> kraus{std::sqrt(p0) * Matrix::Identity(2, 2), std::sqrt(p1) * pauli_x(),
                              std::sqrt(p2) * pauli_y(), std::sqrt(p3) * pauli_z()};
    return make_channel_unchecked(std::move(kraus)).with_family(Family{FamilyKind::Pauli, {p1, p2, p3}, {}, {}});
}

Channel make_dephasing(double p) {
    require_unit_interval(p, "p");
    return make_pauli(0.0, 0.0, p);
}

Channel make_bitflip(double p) {
    require_unit_interval(p, "p");
    return make_pauli(p, 0.0, 0.0);
}

Channel make_depolarizing(double p) {
    require_unit_interval(p, "p");
    return make_pauli(p / 3.0, p / 3.0, p / 3.0);
}

Channel make_erasure(double p, std::size_t d) {
    require_unit_interval(p, "p");
    if (d == 0) {
        throw Error(ErrorCode::ParamOutOfRange, "erasure dimension must be positive");
    }
    std::vector<Matrix> kraus;
    Matrix keep = Matrix::Zero(idx(d + 1), idx(d));
    keep.topRows(idx(d)) = Matrix::Identity(idx(d), idx(d)) * std::sqrt(1.0 - p);
    kraus.push_back(std::move(keep));
    for (std::size_t i = 0; i < d; ++i) {
        Matrix flag = Matrix::Zero(idx(d + 1), idx(d));
        flag(idx(d), idx(i)) = std::sqrt(p);
        kraus.push_back(std::move(flag));
    }
    return make_channel_unchecked(std::move(kraus))
        .with_family(Family{FamilyKind::Erasure, {p, static_cast<double>(d)}, {}, {}});
}

Matrix symmetric_embedding(std::size_t d) {
    const std::size_t n = d * (d + 1) / 2;
    Matrix v = Matrix::Zero(idx(d * d), idx(n));
    std::size_t col = 0;
    for (std::size_t j = 0; j < d; ++j) {
        v(idx(j * d + j), idx(col++)) = 1.0;
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            v(idx(j * d + k), idx(col)) = r;
            v(idx(k * d + j), idx(col)) = r;
            ++col;
        }
    }
    return v;
}

Channel make_symmetric(std::size_t d, const Limits &limits) {
    if (d == 0) {
        throw Error(ErrorCode::ParamOutOfRange, "symmetric channel dimension must be positive");
    }
    if (d > limits.max_symmetric_dim) {
        throw Error(ErrorCode::DimensionTooLarge, "symmetric channel dimension " + std::to_string(d) +
                                                      " exceeds cap " + std::to_string(limits.max_symmetric_dim));
    }
    Matrix v = symmetric_embedding(d);
    // Kraus operators (I ⊗ ⟨k|) V trace out the second factor.
    std::vector<Matrix> kraus;
    for (std::size_t k = 0; k < d; ++k) {
        Matrix kk(idx(d), v.cols());
        for (std::size_t a = 0; a < d; ++a) {
            kk.row(idx(a)) = v.row(idx(a * d + k));
        }
        kraus.push_back(std::move(kk));
    }
    return make_channel_unchecked(std::move(kraus))
        .with_family(Family{FamilyKind::Symmetric, {static_cast<double>(d)}, {}, {}});
}

Channel make_family_channel(const Family &family, const Limits &limits) {
    auto param = [&](std::size_t i) {
        if (i >= family.params.size()) {
            throw Error(ErrorCode::BadSpec, "channel family is missing a parameter");
        }
        return family.params[i];
    };
    auto as_dim = [&](double x) {
        if (!(x >= 1.0) || x != std::floor(x)) {
            throw Error(ErrorCode::ParamOutOfRange, "dimension must be a positive integer");
        }
        return static_cast<std::size_t>(x);
    };
    Channel base = [&] {
        switch (family.kind) {
            case FamilyKind::Identity:
                return make_identity(as_dim(param(0)));
            case FamilyKind::AmplitudeDamping:
                return make_amplitude_damping(param(0));
            case FamilyKind::TwoKraus:
                return make_two_kraus(param(0), param(1));
            case FamilyKind::Pauli:
                return make_pauli(param(0), param(1), param(2));
            case FamilyKind::Erasure:
                return make_erasure(param(0), as_dim(param(1)));
            case FamilyKind::Symmetric:
                return make_symmetric(as_dim(param(0)), limits);
        }
        throw Error(ErrorCode::BadSpec, "unknown channel family");
    }();
    if (family.pre.size() == 0 && family.post.size() == 0) {
        return base;
    }
    Matrix pre = family.pre.size() == 0 ? Matrix(Matrix::Identity(idx(base.din()), idx(base.din()))) : family.pre;
    Matrix post =
        family.post.size() == 0 ? Matrix(Matrix::Identity(idx(base.dout()), idx(base.dout()))) : family.post;
    return conjugate(base, pre, post);
}

}  // namespace privcap
