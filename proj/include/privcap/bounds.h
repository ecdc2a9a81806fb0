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

#ifndef PRIVCAP_BOUNDS_H
#define PRIVCAP_BOUNDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "privcap/capacity.h"
#include "privcap/certify.h"
#include "privcap/channel.h"

namespace privcap {

// ---------------------------------------------------------------------------
// Decompositions N = Σ_i p_i D_i ∘ N_i

struct DecompositionPart {
    double prob;
    Channel inner;
    /// D_i; absent means identity.
    std::optional<Channel> post;
    /// Optional pre-computed certificate for `inner`; re-verified before use.
    std::optional<DegradingCertificate> certificate;
};

struct Decomposition {
    std::vector<DecompositionPart> parts;
    Channel target;
};

/// Σ_i p_i D_i ∘ N_i as a single channel.
Channel decomposition_channel(const Decomposition &d);

/// ‖Σ p_i J(D_i ∘ N_i) − J(N)‖₁. Weights are not renormalized.
double decomposition_residual(const Decomposition &d);
/// decomposition_residual, throwing
/// DecompositionMismatch when it exceeds tol.
double verify_decomposition(const Decomposition &d, double tol = 1e-8);

/// Pauli channel with (X, Y, Z) probabilities (q(1−q), q², q(1−q)).
Channel bb84_channel(double q);
/// γ_q = 4q(1−q).
double bb84_gamma(double q);
/// exp(iπX/4).
Matrix bb84_rotation();
/// Two equal-weight, conjugated amplitude-damping channels with γ = γ_q.
Decomposition bb84_ampdamp_decomposition(double q);
/// Pauli channel as Σ α_i N^{σ_i}_{|p|} with α_i = p_i/|p|: single-axis flip
/// channels that all have error probability |p|.
Decomposition pauli_flip_decomposition(double p1, double p2, double p3);
/// One part: identity followed by N itself. Always valid, cost log₂ din.
Decomposition trivial_decomposition(const Channel &n);

struct CostOptions {
    bool allow_heuristic = false;
    CertifyOptions certify = {};
    Q1Options q1 = {};
};

struct PartCost {
    double prob;
    double q1;
    Direction certified_as;
    bool heuristic;
};

struct CostReport {
    double cost = 0.0;
    bool heuristic = false;
    std::vector<PartCost> parts;
};

/// Σ p_i Q^(1)(N_i). Every inner channel must be certified degradable or
/// antidegradable (UncertifiedPiece otherwise); antidegradable parts cost 0.
/// Q^(1) comes from closed forms; q1_optimize is used only when
/// allow_heuristic is set (HeuristicRefused otherwise).
CostReport decomposition_cost(const Decomposition &d, const CostOptions &options = {});

/// Key-rate bound of the collective attack built from a decomposition: Eve
/// runs the isometric extension of N_i with probability p_i. This is the same
/// number as decomposition_cost.
double collective_attack_rate_bound(const Decomposition &d, const CostOptions &options = {});

// ---------------------------------------------------------------------------
// Convex envelopes and bound curves

class PiecewiseLinear {
   public:
    explicit PiecewiseLinear(std::vector<std::pair<double, double>> vertices) : vertices_(std::move(vertices)) {
    }
    /// Linear interpolation between vertices; OutOfRange outside them.
    double operator()(double x) const;
    const std::vector<std::pair<double, double>> &vertices() const {
        return vertices_;
    }

   private:
    std::vector<std::pair<double, double>> vertices_;
};

/// Lower convex hull (monotone chain) of points with strictly increasing x.
PiecewiseLinear lower_convex_envelope(const std::vector<std::pair<double, double>> &points);

struct BoundSample {
    double x;
    std::vector<double> components;
    double envelope;
};

struct BoundCurve {
    std::string parameter_name;
    std::vector<std::string> component_names;
    std::vector<BoundSample> samples;
    /// Analytic zero of the bound pinned into the envelope.
    std::optional<double> zero_point;
};

/// (1/2)(1 − 1/√2).
double bb84_threshold();
/// 4√(1−p)(1 − √(1−p)).
double depolarizing_eta(double p);

/// conv(1 − H(q(2−q)), f(γ_q)) on a grid in [0, 1/2].
BoundCurve bb84_upper_bound(const std::vector<double> &q_grid);
/// conv(1 − H(p), f(η_p), (1 − 4p)₊) on a grid in [0, 1].
BoundCurve depolarizing_upper_bound(const std::vector<double> &p_grid);
/// 1 − H(w) along the ray w·(α₁, α₂, α₃), w ∈ [0, 1]; α normalized from
/// `weights`.
BoundCurve pauli_ray_upper_bound(const std::vector<double> &w_grid, const std::vector<double> &weights);

/// max(0, 1 − H(p1 + p2 + p3)).
double pauli_upper_bound(double p1, double p2, double p3);

/// Depolarizing probability to QBER: q = 2p/3, and back.
double qber_map(double p);
double depolarizing_from_qber(double q);

/// Evenly spaced grid with `steps` points on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, int steps);

// ---------------------------------------------------------------------------
// Research hook: search for conjugating unitaries that turn a list of qubit
// channels into a decomposition of `target`. No guarantee of success.

struct FitOptions {
    int max_iters = 500;
    std::uint64_t seed = 0;
    /// Random initial rotations; when false every part starts at the identity.
    bool random_start = true;
};

struct FitResult {
    Decomposition decomposition;
    double residual;
    int iterations;
    /// Objective (squared Frobenius distance of Choi matrices) per iteration.
    std::vector<double> trace;
};

FitResult fit_decomposition(const Channel &target, const std::vector<std::pair<double, Channel>> &parts,
                            const FitOptions &options = {});

}  // namespace privcap

#endif
