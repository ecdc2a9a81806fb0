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

#ifndef PRIVCAP_CAPACITY_H
#define PRIVCAP_CAPACITY_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "privcap/channel.h"

namespace privcap {

/// Result of a one-dimensional maximization over the input parameter t ∈ [0,1].
struct OptResult {
    double value = 0.0;
    double argument = 0.0;
    int iterations = 0;
    bool tolerance_met = false;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// The endpoints are also evaluated and win if they are better.
OptResult golden_section_maximize(const std::function<double(double)> &f, double lo, double hi, double tol = 1e-9,
                                  int max_iters = 200);

/// H(t(1−γ)) − H(tγ): coherent information of amplitude damping at input
/// population t in the excited state.
double amp_damp_objective(double gamma, double t);
/// H(t(1−γ) + (1−t)δ) − H(tγ + (1−t)δ).
double two_kraus_objective(double gamma, double delta, double t);

/// Private (= quantum) capacity of amplitude damping; zero for γ ≥ 1/2.
OptResult f_amp(double gamma);
/// Optimized coherent information of the two-Kraus qubit family, clamped at 0.
OptResult q1_two_kraus(double gamma, double delta);
/// 1 − H(p).
double cp_dephasing(double p);
/// max(0, (1 − 2p) log₂ d).
double cp_erasure(double p, std::size_t d);

struct Q1Options {
    int restarts = 16;
    double tol = 1e-6;
    std::uint64_t seed = 0;
    int max_iters = 400;
    Limits limits = {};
};

/// Best coherent information found by multi-restart local ascent. A lower
/// bound on Q^(1); never an optimality certificate.
struct Q1Result {
    double value = 0.0;
    DensityMatrix state = DensityMatrix::maximally_mixed(1);
    int iterations = 0;
    bool tolerance_met = false;
    bool heuristic = true;
    std::vector<double> restart_values;
};

Q1Result q1_optimize(const Channel &c, const Q1Options &options = {});

/// Closed-form Q^(1) when the channel carries a recognized family tag
/// (conjugation by unitaries does not change it); nullopt otherwise.
std::optional<double> q1_closed_form(const Channel &c);

/// Bisection for the point where a non-increasing curve drops to zero.
/// Requires curve(lo) > 0 ≥ curve(hi); 32 samples are checked for
/// monotonicity first.
double find_zero_threshold(const std::function<double(double)> &curve, double lo, double hi, double tol = 1e-8);

}  // namespace privcap

#endif
