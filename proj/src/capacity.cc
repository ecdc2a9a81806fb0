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

#include "privcap/capacity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "privcap/error.h"
#include "privcap/info.h"

namespace privcap {
namespace {

void require_unit_interval(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::ParamOutOfRange, std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

double clamp_prob(double x) {
    return std::clamp(x, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Density-matrix parameterization ρ = LL†/Tr(LL†), L lower triangular.
// Parameters: n real diagonal entries, then (re, im) for each i > j.

Matrix factor_from_params(const Eigen::VectorXd &x, Eigen::Index n) {
    Matrix l = Matrix::Zero(n, n);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        l(i, i) = x(k++);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            l(i, j) = Complex(x(k), x(k + 1));
            k += 2;
        }
    }
    return l;
}

Eigen::VectorXd params_from_factor(const Matrix &l) {
    const Eigen::Index n = l.rows();
    Eigen::VectorXd x(n * n);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        x(k++) = l(i, i).real();
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            x(k++) = l(i, j).real();
            x(k++) = l(i, j).imag();
        }
    }
    return x;
}

Matrix state_from_params(const Eigen::VectorXd &x, Eigen::Index n) {
    Matrix l = factor_from_params(x, n);
    Matrix rho = l * l.adjoint();
    double tr = rho.trace().real();
    if (!(tr > 1e-300)) {
        return Matrix::Identity(n, n) / static_cast<double>(n);
    }
    rho /= tr;
    return (rho + rho.adjoint()) * 0.5;
}

struct Ascent {
    Eigen::VectorXd x;
    double value;
    int iterations;
};

Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd &)> &f, const Eigen::VectorXd &x) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double h = 1e-6 * std::max(1.0, std::abs(x(i)));
        probe(i) = x(i) + h;
        const double up = f(probe);
        probe(i) = x(i) - h;
        const double down = f(probe);
        probe(i) = x(i);
        g(i) = (up - down) / (2.0 * h);
    }
    return g;
}

// Quasi-Newton (BFGS) ascent with finite-difference gradients and an Armijo
// backtracking line search.
Ascent local_ascent(const std::function<double(const Eigen::VectorXd &)> &f, Eigen::VectorXd x, int max_iters) {
    const Eigen::Index n = x.size();
    double fx = f(x);
    Eigen::VectorXd g = fd_gradient(f, x);
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
    int it = 0;
    int stalls = 0;
    for (; it < max_iters; ++it) {
        if (g.norm() < 1e-9) {
            break;
        }
        Eigen::VectorXd dir = h * g;
        double slope = dir.dot(g);
        if (!(slope > 0.0)) {
            h.setIdentity();
            dir = g;
            slope = g.squaredNorm();
        }
        double step = 1.0;
        Eigen::VectorXd trial;
        double ft = -std::numeric_limits<double>::infinity();
        bool accepted = false;
        while (step > 1e-14) {
            trial = x + step * dir;
            ft = f(trial);
            if (ft >= fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;
        }
        Eigen::VectorXd g_new = fd_gradient(f, trial);
        Eigen::VectorXd s = trial - x;
        // Minimizing −f: the gradient difference flips sign.
        Eigen::VectorXd y = g - g_new;
        const double sy = s.dot(y);
        if (sy > 1e-14) {
            const double rho = 1.0 / sy;
            Eigen::MatrixXd ident = Eigen::MatrixXd::Identity(n, n);
            h = (ident - rho * s * y.transpose()) * h * (ident - rho * y * s.transpose()) + rho * s * s.transpose();
        }
        const double gain = ft - fx;
        x = std::move(trial);
        fx = ft;
        g = std::move(g_new);
        stalls = gain < 1e-13 ? stalls + 1 : 0;
        if (stalls >= 3) {
            break;
        }
    }
    return Ascent{std::move(x), fx, it};
}

}  // namespace

// ---------------------------------------------------------------------------
// One-dimensional optimization

OptResult golden_section_maximize(const std::function<double(double)> &f, double lo, double hi, double tol,
                                  int max_iters) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    while (b - a > tol && it < max_iters) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++it;
    }
    OptResult best;
    best.argument = 0.5 * (a + b);
    best.value = f(best.argument);
    best.iterations = it;
    best.tolerance_met = b - a <= tol;
    for (double edge : {lo, hi}) {
        double v = f(edge);
        if (v > best.value) {
            best.value = v;
            best.argument = edge;
        }
    }
    return best;
}

double amp_damp_objective(double gamma, double t) {
    return binary_entropy(clamp_prob(t * (1.0 - gamma))) - binary_entropy(clamp_prob(t * gamma));
}

double two_kraus_objective(double gamma, double delta, double t) {
    return binary_entropy(clamp_prob(t * (1.0 - gamma) + (1.0 - t) * delta)) -
           binary_entropy(clamp_prob(t * gamma + (1.0 - t) * delta));
}

OptResult f_amp(double gamma) {
    require_unit_interval(gamma, "gamma");
    OptResult r = golden_section_maximize([gamma](double t) { return amp_damp_objective(gamma, t); }, 0.0, 1.0);
    if (r.value <= 0.0) {
        r.value = 0.0;
    }
    return r;
}

OptResult q1_two_kraus(double gamma, double delta) {
    require_unit_interval(gamma, "gamma");
    require_unit_interval(delta, "delta");
    OptResult r = golden_section_maximize(
        [gamma, delta](double t) { return two_kraus_objective(gamma, delta, t); }, 0.0, 1.0);
    if (r.value <= 0.0) {
        r.value = 0.0;
    }
    return r;
}

double cp_dephasing(double p) {
    require_unit_interval(p, "p");
    return 1.0 - binary_entropy(p);
}

double cp_erasure(double p, std::size_t d) {
    require_unit_interval(p, "p");
    if (d == 0) {
        throw Error(ErrorCode::ParamOutOfRange, "dimension must be positive");
    }
    return std::max(0.0, (1.0 - 2.0 * p) * std::log2(static_cast<double>(d)));
}

// ---------------------------------------------------------------------------
// General coherent-information optimizer

Q1Result q1_optimize(const Channel &c, const Q1Options &options) {
    if (c.din() > options.limits.max_optimize_dim) {
        throw Error(ErrorCode::DimensionTooLarge, "input dimension " + std::to_string(c.din()) + " exceeds cap " +
                                                      std::to_string(options.limits.max_optimize_dim));
    }
    const auto n = static_cast<Eigen::Index>(c.din());
    const Channel env = complementary(c);
    auto objective = [&](const Eigen::VectorXd &x) {
        return coherent_information(c, env, DensityMatrix::unchecked(state_from_params(x, n)));
    };

    std::vector<Eigen::VectorXd> seeds;
    seeds.push_back(params_from_factor(Matrix::Identity(n, n)));
    for (Eigen::Index k = 0; k < n; ++k) {
        // Exact basis states sit where the parameterization is degenerate; start
        // just inside the cone.
        Matrix l = Matrix::Identity(n, n) * 1e-3;
        l(k, k) = 1.0;
        seeds.push_back(params_from_factor(l));
    }
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto restarts = static_cast<std::size_t>(std::max(1, options.restarts));
    while (seeds.size() < restarts) {
        Eigen::VectorXd x(n * n);
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            x(i) = normal(rng);
        }
        seeds.push_back(std::move(x));
    }
    seeds.resize(restarts);

    Q1Result result;
    result.value = -std::numeric_limits<double>::infinity();
    auto consider = [&](double value, const Matrix &rho) {
        if (value > result.value) {
            result.value = value;
            result.state = DensityMatrix::unchecked(rho);
        }
    };
    // Candidates evaluated exactly, independent of the ascent.
    {
        Matrix mixed = Matrix::Identity(n, n) / static_cast<double>(n);
        consider(coherent_information(c, env, DensityMatrix::unchecked(mixed)), mixed);
        for (Eigen::Index k = 0; k < n; ++k) {
            Matrix b = basis_projector(c.din(), static_cast<std::size_t>(k));
            consider(coherent_information(c, env, DensityMatrix::unchecked(b)), b);
        }
    }
    for (const auto &seed : seeds) {
        Ascent a = local_ascent(objective, seed, options.max_iters);
        result.iterations += a.iterations;
        result.restart_values.push_back(a.value);
        consider(a.value, state_from_params(a.x, n));
    }
    std::vector<double> sorted = result.restart_values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    result.tolerance_met = sorted.size() >= 2 && sorted[0] - sorted[1] <= options.tol;
    return result;
}

std::optional<double> q1_closed_form(const Channel &c) {
    if (!c.family()) {
        return std::nullopt;
    }
    const Family &f = *c.family();
    switch (f.kind) {
        case FamilyKind::Identity:
            return std::log2(f.params.at(0));
        case FamilyKind::AmplitudeDamping:
            return f_amp(f.params.at(0)).value;
        case FamilyKind::TwoKraus:
            return q1_two_kraus(f.params.at(0), f.params.at(1)).value;
        case FamilyKind::Pauli: {
            int nonzero = 0;
            double total = 0.0;
            for (double p : f.params) {
                nonzero += p > 0.0 ? 1 : 0;
                total += p;
            }
            if (nonzero > 1) {
                return std::nullopt;
            }
            return cp_dephasing(std::min(1.0, total));
        }
        case FamilyKind::Erasure:
            return cp_erasure(f.params.at(0), static_cast<std::size_t>(f.params.at(1)));
        case FamilyKind::Symmetric:
            return 0.0;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Thresholds

double find_zero_threshold(const std::function<double(double)> &curve, double lo, double hi, double tol) {
    if (!(lo < hi)) {
        throw Error(ErrorCode::NoSignChange, "threshold search needs lo < hi");
    }
    double f_lo = curve(lo);
    double f_hi = curve(hi);
    if (!(f_lo > 0.0) || !(f_hi <= 0.0)) {
        throw Error(ErrorCode::NoSignChange, "curve must be positive at lo and non-positive at hi");
    }
    constexpr int kSamples = 32;
    double prev = f_lo;
    for (int i = 1; i < kSamples; ++i) {
        double x = lo + (hi - lo) * i / (kSamples - 1);
        double v = curve(x);
        if (v > prev + 1e-10) {
            throw Error(ErrorCode::NonMonotone, "curve increases near x = " + std::to_string(x));
        }
        prev = v;
    }
    double a = lo;
    double b = hi;
    while (b - a > tol) {
        double mid = 0.5 * (a + b);
        if (curve(mid) > 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace privcap
