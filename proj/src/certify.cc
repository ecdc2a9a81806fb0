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

#include "privcap/certify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "privcap/error.h"

namespace privcap {
namespace {

Eigen::Index idx(std::size_t n) {
    return static_cast<Eigen::Index>(n);
}

struct Problem {
    Channel source;  // channel the degrading map acts after
    Channel target;  // what D ∘ source must reproduce
};

Problem make_problem(const Channel &c, Direction direction) {
    Channel minimal = minimize_kraus(c);
    Channel env = complementary(minimal);
    if (direction == Direction::Degradable) {
        return Problem{std::move(minimal), std::move(env)};
    }
    return Problem{std::move(env), std::move(minimal)};
}

// Orthogonal projection onto {x : A x = b} for the vectorized (unnormalized)
// Choi matrix C of D: dx → dy, x[r * n + s] = C(r, s) with r = i * dy + y.
class AffineProjector {
   public:
    AffineProjector(const Channel &source, const Channel &target) {
        const std::size_t dx = source.dout();
        const std::size_t dy = target.dout();
        const std::size_t din = source.din();
        n_ = dx * dy;
        const std::size_t unknowns = n_ * n_;
        const std::size_t rows = din * din * dy * dy + dx * dx;
        Matrix a = Matrix::Zero(idx(rows), idx(unknowns));
        Vector b = Vector::Zero(idx(rows));
        std::size_t row = 0;
        for (std::size_t p = 0; p < din; ++p) {
            for (std::size_t q = 0; q < din; ++q) {
                Matrix unit = Matrix::Zero(idx(din), idx(din));
                unit(idx(p), idx(q)) = 1.0;
                Matrix m = apply_operator(source, unit);
                Matrix t = apply_operator(target, unit);
                for (std::size_t y = 0; y < dy; ++y) {
                    for (std::size_t y2 = 0; y2 < dy; ++y2) {
                        for (std::size_t i = 0; i < dx; ++i) {
                            for (std::size_t j = 0; j < dx; ++j) {
                                a(idx(row), idx((i * dy + y) * n_ + j * dy + y2)) = m(idx(i), idx(j));
                            }
                        }
                        b(idx(row)) = t(idx(y), idx(y2));
                        ++row;
                    }
                }
            }
        }
        // Trace preservation: Σ_y C((i,y),(j,y)) = δ_ij.
        for (std::size_t i = 0; i < dx; ++i) {
            for (std::size_t j = 0; j < dx; ++j) {
                for (std::size_t y = 0; y < dy; ++y) {
                    a(idx(row), idx((i * dy + y) * n_ + j * dy + y)) = 1.0;
                }
                b(idx(row)) = i == j ? 1.0 : 0.0;
                ++row;
            }
        }
        // Orthonormal basis of range(A†) from a pivoted QR; particular solution
        // is the minimum-norm least-squares one.
        Matrix a_adj = a.adjoint();
        Eigen::ColPivHouseholderQR<Matrix> qr(a_adj);
        qr.setThreshold(1e-10);
        const Eigen::Index rank = qr.rank();
        basis_ = qr.householderQ() * Matrix::Identity(a_adj.rows(), rank);
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
        cod.setThreshold(1e-10);
        particular_ = cod.solve(b);
    }

    Matrix project(const Matrix &c) const {
        Vector x = flatten(c);
        Vector diff = x - particular_;
        x -= basis_ * (basis_.adjoint() * diff);
        return unflatten(x);
    }

   private:
    Vector flatten(const Matrix &c) const {
        Vector x(idx(n_ * n_));
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t s = 0; s < n_; ++s) {
                x(idx(r * n_ + s)) = c(idx(r), idx(s));
            }
        }
        return x;
    }

    Matrix unflatten(const Vector &x) const {
        Matrix c(idx(n_), idx(n_));
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t s = 0; s < n_; ++s) {
                c(idx(r), idx(s)) = x(idx(r * n_ + s));
            }
        }
        return c;
    }

    std::size_t n_ = 0;
    Matrix basis_;
    Vector particular_;
};

Matrix project_psd(const Matrix &m) {
    Matrix h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    RealVector vals = solver.eigenvalues().cwiseMax(0.0);
    return solver.eigenvectors() * vals.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
}

// Kraus extraction followed by an exact trace-preservation repair
// K ↦ K M^{-1/2}, M = Σ K†K.
std::optional<Channel> extract_map(const Matrix &choi_unnormalized, std::size_t dx, std::size_t dy) {
    ChoiMatrix j{dx, dy, choi_unnormalized / static_cast<double>(dx)};
    std::vector<Matrix> kraus = kraus_from_choi(j, 1e-10);
    if (kraus.empty()) {
        return std::nullopt;
    }
    Matrix m = Matrix::Zero(idx(dx), idx(dx));
    for (const auto &k : kraus) {
        m += k.adjoint() * k;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) * 0.5);
    if (solver.eigenvalues().minCoeff() <= 1e-8) {
        return std::nullopt;
    }
    RealVector inv_sqrt = solver.eigenvalues().cwiseSqrt().cwiseInverse();
    Matrix fix = solver.eigenvectors() * inv_sqrt.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
    for (auto &k : kraus) {
        k = k * fix;
    }
    try {
        return make_channel(std::move(kraus), kStructuralTol);
    } catch (const Error &) {
        return std::nullopt;
    }
}

double problem_residual(const Problem &problem, const Channel &degrading_map) {
    return choi_distance(compose(degrading_map, problem.source), problem.target);
}

}  // namespace

std::string_view direction_name(Direction d) {
    return d == Direction::Degradable ? "degradable" : "antidegradable";
}

CertifyOutcome certify(const Channel &c, Direction direction, const CertifyOptions &options) {
    Problem problem = make_problem(c, direction);
    const std::size_t dx = problem.source.dout();
    const std::size_t dy = problem.target.dout();
    const std::size_t cap = options.limits.max_certify_dim;
    if (c.dout() > cap || problem.source.dout() > cap || problem.target.dout() > cap) {
        throw Error(ErrorCode::DimensionTooLarge, "output or environment dimension exceeds cap " + std::to_string(cap));
    }

    AffineProjector affine(problem.source, problem.target);
    const auto n = idx(dx * dy);
    // Start from the trace-and-replace map ρ ↦ Tr(ρ) I/dy.
    Matrix x = Matrix::Identity(n, n) / static_cast<double>(dy);

    CertifyOutcome outcome;
    outcome.best_residual = std::numeric_limits<double>::infinity();
    outcome.iterations = 0;
    std::optional<Channel> best_map;
    const int check_every = std::max(1, options.check_every);
    double last_gap_checkpoint = std::numeric_limits<double>::infinity();

    for (int it = 1; it <= options.max_iters; ++it) {
        Matrix y = affine.project(x);
        x = project_psd(y);
        outcome.iterations = it;
        const bool last = it == options.max_iters;
        if (it % check_every != 0 && it != 1 && !last) {
            continue;
        }
        if (auto candidate = extract_map(x, dx, dy)) {
            double r = problem_residual(problem, *candidate);
            if (r < outcome.best_residual) {
                outcome.best_residual = r;
                best_map = std::move(candidate);
            }
        }
        outcome.residual_trace.push_back(outcome.best_residual);
        if (outcome.best_residual <= options.tol) {
            break;
        }
        // Stop once the distance between the two sets has stalled.
        if (it % 200 == 0) {
            double gap = (x - y).norm();
            if (gap > last_gap_checkpoint * (1.0 - 1e-9)) {
                break;
            }
            last_gap_checkpoint = gap;
        }
    }

    if (best_map && outcome.best_residual <= options.tol) {
        outcome.certificate = DegradingCertificate{direction, *best_map, outcome.best_residual, outcome.iterations};
    }
    return outcome;
}

CertifyOutcome certify_degradable(const Channel &c, const CertifyOptions &options) {
    return certify(c, Direction::Degradable, options);
}

CertifyOutcome certify_antidegradable(const Channel &c, const CertifyOptions &options) {
    return certify(c, Direction::Antidegradable, options);
}

double verify_certificate(const Channel &c, const DegradingCertificate &cert) {
    Problem problem = make_problem(c, cert.direction);
    if (cert.degrading_map.din() != problem.source.dout() || cert.degrading_map.dout() != problem.target.dout()) {
        throw Error(ErrorCode::DimensionMismatch, "degrading map dimensions do not fit the channel");
    }
    return problem_residual(problem, cert.degrading_map);
}

}  // namespace privcap
