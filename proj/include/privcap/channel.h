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

#ifndef PRIVCAP_CHANNEL_H
#define PRIVCAP_CHANNEL_H

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "privcap/limits.h"
#include "privcap/linalg.h"

namespace privcap {

/// Default tolerance for structural checks (Hermiticity aside).
inline constexpr double kStructuralTol = 1e-10;

/// Hermitian, positive semidefinite, unit trace.
class DensityMatrix {
   public:
    /// Validates the invariants; throws NotAState otherwise.
    static DensityMatrix from_matrix(Matrix m, double tol = kStructuralTol);
    /// Skips validation. Only for matrices produced by trace-preserving maps.
    static DensityMatrix unchecked(Matrix m);
    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix pure(const Vector &psi);
    static DensityMatrix basis(std::size_t dim, std::size_t index);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const Matrix &matrix() const {
        return m_;
    }

   private:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
    }
    Matrix m_;
};

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Named channel families that admit closed-form capacities. `pre`/`post` hold
/// the unitaries of any conjugation applied since construction (empty means
/// identity), so the channel equals post · base(pre ρ pre†) · post†.
enum class FamilyKind { Identity, AmplitudeDamping, TwoKraus, Pauli, Erasure, Symmetric };

struct Family {
    FamilyKind kind;
    std::vector<double> params;
    Matrix pre;
    Matrix post;
};

/// A CPTP map stored as a Kraus set. Zero Kraus operators are kept.
class Channel {
   public:
    std::size_t din() const {
        return din_;
    }
    std::size_t dout() const {
        return dout_;
    }
    std::size_t kraus_count() const {
        return kraus_.size();
    }
    const std::vector<Matrix> &kraus() const {
        return kraus_;
    }
    const std::optional<Family> &family() const {
        return family_;
    }

    Channel with_family(Family family) const;
    Channel without_family() const;

   private:
    friend Channel make_channel(std::vector<Matrix> kraus, double tol);
    friend Channel make_channel_unchecked(std::vector<Matrix> kraus);
    Channel(std::size_t din, std::size_t dout, std::vector<Matrix> kraus)
        : din_(din), dout_(dout), kraus_(std::move(kraus)) {
    }

    std::size_t din_;
    std::size_t dout_;
    std::vector<Matrix> kraus_;
    std::optional<Family> family_;
};

/// Isometric (Stinespring) extension V = Σ_k K_k ⊗ |k⟩_E; rows are indexed
/// by b * dout_e + k.
struct Isometry {
    std::size_t din;
    std::size_t dout_b;
    std::size_t dout_e;
    Matrix matrix;
};

/// Normalized Choi state (id ⊗ N)(|Φ⟩⟨Φ|), |Φ⟩ = Σ_i |ii⟩ / √din. Rows are
/// indexed by input * dout + output.
struct ChoiMatrix {
    std::size_t din;
    std::size_t dout;
    Matrix matrix;
};

/// max |Σ K†K − I| over entries.
double completeness_residual(const std::vector<Matrix> &kraus);

/// Validates shapes and completeness (residual ≤ tol).
Channel make_channel(std::vector<Matrix> kraus, double tol = 1e-8);
/// Shape checks only. For Kraus sets that are trace preserving by construction.
Channel make_channel_unchecked(std::vector<Matrix> kraus);

Isometry isometric_extension(const Channel &c);
/// Environment output: Kraus F_b with (F_b)_{k,i} = (K_k)_{b,i}.
Channel complementary(const Channel &c);

DensityMatrix apply(const Channel &c, const DensityMatrix &rho);
/// Applies the map to an arbitrary (not necessarily positive) operator.
Matrix apply_operator(const Channel &c, const Matrix &op);
/// Tr_E V ρ V† computed from the isometry.
Matrix trace_out_environment(const Isometry &v, const Matrix &rho);
Matrix trace_out_receiver(const Isometry &v, const Matrix &rho);

ChoiMatrix choi(const Channel &c);
/// Kraus operators from a Choi matrix by eigen-decomposition; eigenvalues at or
/// below `cutoff` are dropped. No completeness check.
std::vector<Matrix> kraus_from_choi(const ChoiMatrix &j, double cutoff);
/// Same channel with the minimal number of Kraus operators. Linearly
/// independent nonzero operators are returned unchanged.
Channel minimize_kraus(const Channel &c, double cutoff = 1e-12);

Channel tensor(const Channel &a, const Channel &b, const Limits &limits = {});
Channel compose(const Channel &after, const Channel &before, const Limits &limits = {});
Channel mixture(const std::vector<std::pair<double, Channel>> &parts, double tol = kStructuralTol);
Channel conjugate(const Channel &c, const Matrix &pre_u, const Matrix &post_u, double tol = kStructuralTol);

Channel make_identity(std::size_t dim);
/// Replaces every input by the fixed state sigma.
Channel make_replacement(std::size_t din, const DensityMatrix &sigma);
/// A_0 = diag(√(1−δ), √(1−γ)), A_1 = [[0, √γ], [√δ, 0]]. δ = 0 is amplitude
/// damping γ; γ = δ is the bit flip.
Channel make_two_kraus(double gamma, double delta);
/// Decay |1⟩ → |0⟩ with probability gamma.
Channel make_amplitude_damping(double gamma);
Channel make_pauli(double p1, double p2, double p3);
Channel make_dephasing(double p);
Channel make_bitflip(double p);
Channel make_depolarizing(double p);
/// C^d → C^d ⊕ |e⟩; the erasure flag is the last basis vector.
Channel make_erasure(double p, std::size_t d);
/// Symmetric-subspace channel from C^{d(d+1)/2} onto C^d.
Channel make_symmetric(std::size_t d, const Limits &limits = {});
/// The embedding V_d of C^{d(d+1)/2} into the symmetric subspace of C^d ⊗ C^d.
Matrix symmetric_embedding(std::size_t d);

/// Rebuilds a channel from its family description.
Channel make_family_channel(const Family &family, const Limits &limits = {});

/// Trace norm ‖J(a) − J(b)‖₁.
double choi_distance(const ChoiMatrix &a, const ChoiMatrix &b);
double choi_distance(const Channel &a, const Channel &b);

}  // namespace privcap

#endif
