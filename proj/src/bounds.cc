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

#include "privcap/bounds.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "privcap/error.h"
#include "privcap/info.h"

namespace privcap {
namespace {

void validate_grid(const std::vector<double> &grid, double lo, double hi) {
    if (grid.size() < 2) {
        throw Error(ErrorCode::TooFewPoints, "grid needs at least two points");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= lo && grid[i] <= hi)) {
            throw Error(ErrorCode::ParamOutOfRange, "grid point " + std::to_string(grid[i]) + " outside [" +
                                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw Error(ErrorCode::UnsortedInput, "grid must be strictly increasing");
        }
    }
}

// Envelope over the pointwise minimum of the components, with an exact zero
// inserted at `zero` when it falls inside the grid.
BoundCurve assemble_curve(std::string name, std::vector<std::string> component_names, const std::vector<double> &grid,
                          std::vector<std::vector<double>> components, std::optional<double> zero) {
    BoundCurve curve;
    curve.parameter_name = std::move(name);
    curve.component_names = std::move(component_names);
    curve.zero_point = zero;
    std::vector<std::pair<double, double>> points;
    points.reserve(grid.size() + 1);
    bool zero_inserted = !zero || !(*zero > grid.front() && *zero < grid.back());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!zero_inserted && *zero < grid[i]) {
            points.emplace_back(*zero, 0.0);
            zero_inserted = true;
        }
        if (zero && grid[i] == *zero) {
            zero_inserted = true;
        }
        double lowest = INFINITY;
        for (auto &value : components[i]) {
            value = std::max(0.0, value);
            lowest = std::min(lowest, value);
        }
        if (zero && grid[i] >= *zero) {
            lowest = 0.0;
        }
        points.emplace_back(grid[i], lowest);
    }
    PiecewiseLinear hull = lower_convex_envelope(points);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        curve.samples.push_back(BoundSample{grid[i], std::move(components[i]), hull(grid[i])});
    }
    return curve;
}

Matrix su2(double a, double b, double c) {
    const double theta = std::sqrt(a * a + b * b + c * c);
    Matrix u = Matrix::Identity(2, 2) * std::cos(theta);
    if (theta > 0.0) {
        const double s = std::sin(theta) / theta;
        u += Complex(0.0, s) * (a * pauli_x() + b * pauli_y() + c * pauli_z());
    }
    return u;
}

}  // namespace

// ---------------------------------------------------------------------------
// Decompositions

Channel decomposition_channel(const Decomposition &d) {
    if (d.parts.empty()) {
        throw Error(ErrorCode::BadDistribution, "decomposition has no parts");
    }
    std::vector<std::pair<double, Channel>> parts;
    parts.reserve(d.parts.size());
    for (const auto &part : d.parts) {
        parts.emplace_back(part.prob, part.post ? compose(*part.post, part.inner) : part.inner);
    }
    return mixture(parts);
}

double decomposition_residual(const Decomposition &d) {
    if (d.parts.empty()) {
        throw Error(ErrorCode::BadDistribution, "decomposition has no parts");
    }
    // Linear in the weights, so a mis-weighted decomposition shows up as a
    // distance rather than an error.
    Matrix sum = -choi(d.target).matrix;
    for (const auto &part : d.parts) {
        if (!(part.prob >= 0.0)) {
            throw Error(ErrorCode::BadDistribution, "negative decomposition weight");
        }
        Channel piece = part.post ? compose(*part.post, part.inner) : part.inner;
        if (piece.din() != d.target.din() || piece.dout() != d.target.dout()) {
            throw Error(ErrorCode::DimensionMismatch, "decomposition part and target dimensions differ");
        }
        sum += part.prob * choi(piece).matrix;
    }
    return trace_norm_hermitian(sum);
}

double verify_decomposition(const Decomposition &d, double tol) {
    double distance = decomposition_residual(d);
    if (!(distance <= tol)) {
        throw Error(ErrorCode::DecompositionMismatch, "Choi distance " + std::to_string(distance) + " exceeds " +
                                                          std::to_string(tol));
    }
    return distance;
}

Channel bb84_channel(double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw Error(ErrorCode::ParamOutOfRange, "q must lie in [0, 1]");
    }
    return make_pauli(q * (1.0 - q), q * q, q * (1.0 - q));
}

double bb84_gamma(double q) {
    return 4.0 * q * (1.0 - q);
}

Matrix bb84_rotation() {
    return (Matrix::Identity(2, 2) + Complex(0.0, 1.0) * pauli_x()) / std::sqrt(2.0);
}

Decomposition bb84_ampdamp_decomposition(double q) {
    Channel target = bb84_channel(q);
    const Channel damping = make_amplitude_damping(bb84_gamma(q));
    const Matrix u = bb84_rotation();
    const Matrix x = pauli_x();
    Decomposition d{{}, target};
    d.parts.push_back({0.5, conjugate(damping, u.adjoint(), u), std::nullopt, std::nullopt});
    d.parts.push_back({0.5, conjugate(damping, x * u.adjoint(), u * x), std::nullopt, std::nullopt});
    verify_decomposition(d, 1e-8);
    return d;
}

Decomposition pauli_flip_decomposition(double p1, double p2, double p3) {
    Channel target = make_pauli(p1, p2, p3);
    const double total = p1 + p2 + p3;
    Decomposition d{{}, target};
    if (total == 0.0) {
        d.parts.push_back({1.0, make_pauli(0.0, 0.0, 0.0), std::nullopt, std::nullopt});
        return d;
    }
    const double weight = std::min(1.0, total);
    if (p1 > 0.0) {
        d.parts.push_back({p1 / total, make_pauli(weight, 0.0, 0.0), std::nullopt, std::nullopt});
    }
    if (p2 > 0.0) {
        d.parts.push_back({p2 / total, make_pauli(0.0, weight, 0.0), std::nullopt, std::nullopt});
    }
    if (p3 > 0.0) {
        d.parts.push_back({p3 / total, make_pauli(0.0, 0.0, weight), std::nullopt, std::nullopt});
    }
    verify_decomposition(d, 1e-8);
    return d;
}

Decomposition trivial_decomposition(const Channel &n) {
    return Decomposition{{{1.0, make_identity(n.din()), n, std::nullopt}}, n};
}

CostReport decomposition_cost(const Decomposition &d, const CostOptions &options) {
    if (d.parts.empty()) {
        throw Error(ErrorCode::BadDistribution, "decomposition has no parts");
    }
    double total = 0.0;
    for (const auto &part : d.parts) {
        if (!(part.prob >= 0.0)) {
            throw Error(ErrorCode::BadDistribution, "negative decomposition weight");
        }
        total += part.prob;
    }
    if (std::abs(total - 1.0) > kStructuralTol) {
        throw Error(ErrorCode::BadDistribution, "decomposition weights sum to " + std::to_string(total));
    }
    CostReport report;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const auto &part = d.parts[i];
        std::optional<Direction> certified;
        if (part.certificate) {
            if (verify_certificate(part.inner, *part.certificate) <= options.certify.tol) {
                certified = part.certificate->direction;
            }
        } else if (certify_degradable(part.inner, options.certify).certified()) {
            certified = Direction::Degradable;
        } else if (certify_antidegradable(part.inner, options.certify).certified()) {
            certified = Direction::Antidegradable;
        }
        if (!certified) {
            throw Error(ErrorCode::UncertifiedPiece,
                        "part " + std::to_string(i) + " is neither certified degradable nor antidegradable");
        }
        PartCost cost{part.prob, 0.0, *certified, false};
        if (*certified == Direction::Degradable) {
            if (auto closed = q1_closed_form(part.inner)) {
                cost.q1 = *closed;
            } else if (options.allow_heuristic) {
                cost.q1 = std::max(0.0, q1_optimize(part.inner, options.q1).value);
                cost.heuristic = true;
                report.heuristic = true;
            } else {
                throw Error(ErrorCode::HeuristicRefused,
                            "part " + std::to_string(i) + " has no closed-form Q1; pass allow_heuristic to optimize");
            }
        }
        report.cost += part.prob * cost.q1;
        report.parts.push_back(cost);
    }
    return report;
}

double collective_attack_rate_bound(const Decomposition &d, const CostOptions &options) {
    return decomposition_cost(d, options).cost;
}

// ---------------------------------------------------------------------------
// Envelopes

double PiecewiseLinear::operator()(double x) const {
    if (vertices_.empty() || !(x >= vertices_.front().first && x <= vertices_.back().first)) {
        throw Error(ErrorCode::OutOfRange, "evaluation point " + std::to_string(x) + " outside the envelope range");
    }
    auto upper = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                                  [](const auto &v, double value) { return v.first < value; });
    if (upper->first == x) {
        return upper->second;
    }
    auto lower = upper - 1;
    const double w = (x - lower->first) / (upper->first - lower->first);
    return lower->second + w * (upper->second - lower->second);
}

PiecewiseLinear lower_convex_envelope(const std::vector<std::pair<double, double>> &points) {
    if (points.size() < 2) {
        throw Error(ErrorCode::TooFewPoints, "envelope needs at least two points");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].first > points[i - 1].first)) {
            throw Error(ErrorCode::UnsortedInput, "envelope points must have strictly increasing x");
        }
    }
    std::vector<std::pair<double, double>> hull;
    for (const auto &p : points) {
        while (hull.size() >= 2) {
            const auto &o = hull[hull.size() - 2];
            const auto &a = hull.back();
            const double cross = (a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first);
            if (cross > 0.0) {
                break;
            }
            hull.pop_back();
        }
        hull.push_back(p);
    }
    return PiecewiseLinear(std::move(hull));
}

double bb84_threshold() {
    return 0.5 * (1.0 - 1.0 / std::sqrt(2.0));
}

double depolarizing_eta(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::ParamOutOfRange, "p must lie in [0, 1]");
    }
    const double s = std::sqrt(1.0 - p);
    return 4.0 * s * (1.0 - s);
}

BoundCurve bb84_upper_bound(const std::vector<double> &q_grid) {
    validate_grid(q_grid, 0.0, 0.5);
    std::vector<std::vector<double>> components;
    components.reserve(q_grid.size());
    for (double q : q_grid) {
        components.push_back({1.0 - binary_entropy(q * (2.0 - q)), f_amp(bb84_gamma(q)).value});
    }
    return assemble_curve("q", {"dephasing", "ampdamp"}, q_grid, std::move(components), bb84_threshold());
}

BoundCurve depolarizing_upper_bound(const std::vector<double> &p_grid) {
    validate_grid(p_grid, 0.0, 1.0);
    std::vector<std::vector<double>> components;
    components.reserve(p_grid.size());
    for (double p : p_grid) {
        components.push_back(
            {1.0 - binary_entropy(p), f_amp(depolarizing_eta(p)).value, std::max(0.0, 1.0 - 4.0 * p)});
    }
    return assemble_curve("p", {"dephasing", "ampdamp", "nocloning"}, p_grid, std::move(components), 0.25);
}

BoundCurve pauli_ray_upper_bound(const std::vector<double> &w_grid, const std::vector<double> &weights) {
    validate_grid(w_grid, 0.0, 1.0);
    if (weights.size() != 3) {
        throw Error(ErrorCode::BadDistribution, "need three Pauli weights");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw Error(ErrorCode::BadDistribution, "Pauli weights must be non-negative");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw Error(ErrorCode::BadDistribution, "Pauli weights must not all vanish");
    }
    std::vector<std::vector<double>> components;
    for (double w : w_grid) {
        const double s = w / total;
        components.push_back({pauli_upper_bound(weights[0] * s, weights[1] * s, weights[2] * s)});
    }
    return assemble_curve("w", {"dephasing"}, w_grid, std::move(components), 0.5);
}

double pauli_upper_bound(double p1, double p2, double p3) {
    if (!(p1 >= 0.0 && p2 >= 0.0 && p3 >= 0.0) || p1 + p2 + p3 > 1.0 + 1e-12) {
        throw Error(ErrorCode::BadDistribution, "Pauli probabilities must be non-negative with sum at most 1");
    }
    return std::max(0.0, 1.0 - binary_entropy(std::min(1.0, p1 + p2 + p3)));
}

double qber_map(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::ParamOutOfRange, "p must lie in [0, 1]");
    }
    return 2.0 * p / 3.0;
}

double depolarizing_from_qber(double q) {
    if (!(q >= 0.0 && q <= 2.0 / 3.0)) {
        throw Error(ErrorCode::ParamOutOfRange, "q must lie in [0, 2/3]");
    }
    return 3.0 * q / 2.0;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    if (steps < 2) {
        throw Error(ErrorCode::TooFewPoints, "grid needs at least two steps");
    }
    if (!(lo < hi)) {
        throw Error(ErrorCode::UnsortedInput, "grid needs lo < hi");
    }
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] = i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1);
    }
    return grid;
}

// ---------------------------------------------------------------------------
// fit_decomposition

FitResult fit_decomposition(const Channel &target, const std::vector<std::pair<double, Channel>> &parts,
                            const FitOptions &options) {
    if (target.din() != 2 || target.dout() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "fit_decomposition handles qubit channels only");
    }
    for (const auto &[p, c] : parts) {
        if (c.din() != 2 || c.dout() != 2) {
            throw Error(ErrorCode::DimensionMismatch, "fit_decomposition handles qubit channels only");
        }
    }
    const Matrix target_choi = choi(target).matrix;
    const auto nparams = static_cast<Eigen::Index>(6 * parts.size());

    auto build = [&](const Eigen::VectorXd &x) {
        std::vector<std::pair<double, Channel>> mixed;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto o = static_cast<Eigen::Index>(6 * i);
            Matrix pre = su2(x(o), x(o + 1), x(o + 2));
            Matrix post = su2(x(o + 3), x(o + 4), x(o + 5));
            mixed.emplace_back(parts[i].first, conjugate(parts[i].second, pre, post));
        }
        return mixed;
    };
    auto objective = [&](const Eigen::VectorXd &x) {
        return (choi(mixture(build(x))).matrix - target_choi).squaredNorm();
    };

    Eigen::VectorXd x = Eigen::VectorXd::Zero(nparams);
    if (options.random_start) {
        std::mt19937_64 rng(options.seed);
        std::uniform_real_distribution<double> angle(-M_PI, M_PI);
        for (Eigen::Index i = 0; i < nparams; ++i) {
            x(i) = angle(rng);
        }
    }

    std::vector<double> trace;
    double fx = objective(x);
    trace.push_back(fx);
    double step = 1.0;
    int it = 0;
    for (; it < options.max_iters && fx > 1e-28; ++it) {
        Eigen::VectorXd g(nparams);
        Eigen::VectorXd probe = x;
        for (Eigen::Index i = 0; i < nparams; ++i) {
            const double h = 1e-7;
            probe(i) = x(i) + h;
            const double up = objective(probe);
            probe(i) = x(i) - h;
            const double down = objective(probe);
            probe(i) = x(i);
            g(i) = (up - down) / (2.0 * h);
        }
        bool moved = false;
        step = std::min(1.0, step * 2.0);
        while (step > 1e-14) {
            Eigen::VectorXd trial = x - step * g;
            double ft = objective(trial);
            if (ft < fx - 1e-4 * step * g.squaredNorm()) {
                x = std::move(trial);
                fx = ft;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        trace.push_back(fx);
        if (!moved) {
            break;
        }
    }

    Decomposition d{{}, target};
    for (auto &[p, c] : build(x)) {
        d.parts.push_back({p, std::move(c), std::nullopt, std::nullopt});
    }
    const double residual = choi_distance(decomposition_channel(d), target);
    return FitResult{std::move(d), residual, it, std::move(trace)};
}

}  // namespace privcap
