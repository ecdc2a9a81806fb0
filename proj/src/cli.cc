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

#include "privcap/cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "privcap/bounds.h"
#include "privcap/capacity.h"
#include "privcap/certify.h"
#include "privcap/error.h"
#include "privcap/info.h"
#include "privcap/io.h"

namespace privcap {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadSpec:
        case ErrorCode::ShapeMismatch:
        case ErrorCode::NotTracePreserving:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::BadDistribution:
        case ErrorCode::NotUnitary:
        case ErrorCode::ParamOutOfRange:
        case ErrorCode::DimensionTooLarge:
        case ErrorCode::NotAState:
        case ErrorCode::TooFewPoints:
        case ErrorCode::UnsortedInput:
        case ErrorCode::HeuristicRefused:
            return kExitUsage;
        default:
            return kExitNumerical;
    }
}

std::string fixed8(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.8f", x);
    return buf;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
}

// Writes to --out when given, else to stdout.
void emit(const RunConfig &cfg, std::ostream &out, const std::function<void(std::ostream &)> &writer) {
    if (cfg.output_path.empty()) {
        writer(out);
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write '" + cfg.output_path + "'");
    }
    writer(file);
}

void validate_paths(const RunConfig &cfg) {
    for (const auto *p : {&cfg.input_path, &cfg.aux_path}) {
        if (!p->empty() && !std::filesystem::is_regular_file(*p)) {
            throw UsageError("input file '" + *p + "' does not exist");
        }
    }
    if (!cfg.output_path.empty()) {
        auto parent = std::filesystem::path(cfg.output_path).parent_path();
        if (!parent.empty() && !std::filesystem::is_directory(parent)) {
            throw UsageError("output directory '" + parent.string() + "' does not exist");
        }
    }
}

// ---------------------------------------------------------------------------

int cmd_curve(const RunConfig &cfg, std::ostream &out) {
    if (cfg.steps < 2) {
        throw UsageError("--steps must be at least 2");
    }
    if (!(cfg.lo < cfg.hi)) {
        throw UsageError("--lo must be smaller than --hi");
    }
    const std::vector<double> grid = linear_grid(cfg.lo, cfg.hi, cfg.steps);
    BoundCurve curve = [&] {
        if (cfg.family == "bb84") {
            return bb84_upper_bound(grid);
        }
        if (cfg.family == "depolarizing") {
            return depolarizing_upper_bound(grid);
        }
        return pauli_ray_upper_bound(grid, cfg.weights);
    }();

    std::string symbol;
    double analytic = 0.0;
    std::function<double(double)> zero_curve;
    if (cfg.family == "bb84") {
        symbol = "q*";
        analytic = bb84_threshold();
        zero_curve = [](double q) { return f_amp(bb84_gamma(q)).value; };
    } else if (cfg.family == "depolarizing") {
        symbol = "p*";
        analytic = 0.25;
        zero_curve = [](double p) {
            return std::min({1.0 - binary_entropy(p), f_amp(depolarizing_eta(p)).value, std::max(0.0, 1.0 - 4.0 * p)});
        };
    } else {
        symbol = "w*";
        analytic = 0.5;
        zero_curve = [](double w) { return std::max(0.0, 1.0 - binary_entropy(w)); };
    }
    const double bisected = find_zero_threshold(zero_curve, 0.0, 0.5);

    emit(cfg, out, [&](std::ostream &os) { write_curve_csv(os, curve); });
    out << "threshold " << symbol << " = " << fixed8(analytic) << "\n";
    if (std::abs(bisected - analytic) > 1e-6) {
        out << "threshold " << symbol << " (bisection) = " << fixed8(bisected) << "\n";
    }
    return kExitOk;
}

int cmd_certify(const RunConfig &cfg, std::ostream &out) {
    const Limits limits = Limits::from_env();
    Channel c = channel_from_json(read_json_file(cfg.input_path), limits);
    CertifyOptions options;
    options.tol = cfg.tol;
    options.max_iters = cfg.max_iters;
    options.limits = limits;
    const Direction direction = cfg.direction == "anti" ? Direction::Antidegradable : Direction::Degradable;
    CertifyOutcome outcome = certify(c, direction, options);
    if (!outcome.certified()) {
        out << "UNKNOWN " << direction_name(direction) << " best_residual = " << format_double(outcome.best_residual)
            << "\n";
        return kExitNegative;
    }
    const double recheck = verify_certificate(c, *outcome.certificate);
    emit(cfg, out, [&](std::ostream &os) { os << std::setw(2) << certificate_to_json(*outcome.certificate) << "\n"; });
    if (!cfg.output_path.empty()) {
        out << "CERTIFIED " << direction_name(direction) << " residual = " << format_double(recheck) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    const Limits limits = Limits::from_env();
    Decomposition d = decomposition_from_json(read_json_file(cfg.input_path), limits);
    const double residual = decomposition_residual(d);
    out << "residual = " << format_double(residual) << "\n";
    if (!(residual <= cfg.tol)) {
        return kExitNegative;
    }
    CostOptions options;
    options.allow_heuristic = cfg.allow_heuristic;
    options.q1.seed = cfg.seed;
    options.q1.limits = limits;
    options.certify.limits = limits;
    CostReport report = decomposition_cost(d, options);
    out << "cost = " << format_double(report.cost) << (report.heuristic ? " (heuristic)" : "") << "\n";
    return kExitOk;
}

int cmd_decompose(const RunConfig &cfg, std::ostream &out) {
    Decomposition d = [&] {
        if (cfg.family == "bb84") {
            return bb84_ampdamp_decomposition(cfg.param);
        }
        if (cfg.family == "depolarizing") {
            return pauli_flip_decomposition(cfg.param / 3.0, cfg.param / 3.0, cfg.param / 3.0);
        }
        if (cfg.weights.size() != 3) {
            throw UsageError("pauli decomposition needs --weights p1,p2,p3");
        }
        return pauli_flip_decomposition(cfg.weights[0], cfg.weights[1], cfg.weights[2]);
    }();
    emit(cfg, out, [&](std::ostream &os) { os << std::setw(2) << decomposition_to_json(d) << "\n"; });
    return kExitOk;
}

int cmd_q1(const RunConfig &cfg, std::ostream &out) {
    const Limits limits = Limits::from_env();
    Channel c = channel_from_json(read_json_file(cfg.input_path), limits);
    if (auto closed = q1_closed_form(c)) {
        out << "q1 = " << format_double(*closed) << " (closed form)\n";
        return kExitOk;
    }
    if (!cfg.allow_heuristic) {
        throw Error(ErrorCode::HeuristicRefused, "no closed form for this channel; pass --allow-heuristic");
    }
    Q1Options options;
    options.seed = cfg.seed;
    options.limits = limits;
    Q1Result r = q1_optimize(c, options);
    out << "q1 >= " << format_double(r.value) << " (heuristic, restarts agree: " << (r.tolerance_met ? "yes" : "no")
        << ")\n";
    return kExitOk;
}

int cmd_info(const RunConfig &cfg, std::ostream &out) {
    const Limits limits = Limits::from_env();
    Channel c = channel_from_json(read_json_file(cfg.input_path), limits);
    DensityMatrix rho = cfg.aux_path.empty()
                            ? DensityMatrix::maximally_mixed(c.din())
                            : DensityMatrix::from_matrix(matrix_from_json(read_json_file(cfg.aux_path)));
    const Channel env = complementary(c);
    const double sb = entropy(apply(c, rho));
    const double se = entropy(apply(env, rho));
    out << "S(B) = " << format_double(sb) << "\n"
        << "S(E) = " << format_double(se) << "\n"
        << "coherent_information = " << format_double(sb - se) << "\n";
    return kExitOk;
}

int cmd_private_info(const RunConfig &cfg, std::ostream &out) {
    const Limits limits = Limits::from_env();
    Channel c = channel_from_json(read_json_file(cfg.input_path), limits);
    CQEnsemble e = ensemble_from_json(read_json_file(cfg.aux_path));
    const double value = cfg.side_dim > 0 ? ss_private_info_estimate(c, static_cast<std::size_t>(cfg.side_dim), e, limits)
                                          : private_information(c, e);
    out << "private_information = " << format_double(value) << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"privcap: private-capacity values and upper bounds for finite-dimensional quantum channels"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *curve = app.add_subcommand("curve", "Emit a bound curve as CSV and print its zero threshold");
    curve->add_option("family", cfg.family, "bb84 | depolarizing | pauli")
        ->required()
        ->check(CLI::IsMember({"bb84", "depolarizing", "pauli"}));
    auto *lo_opt = curve->add_option("--lo", cfg.lo, "Grid start");
    auto *hi_opt = curve->add_option("--hi", cfg.hi, "Grid end");
    auto *steps_opt = curve->add_option("--steps", cfg.steps, "Number of grid points (>= 2)");
    curve->add_option("-o,--out", cfg.output_path, "CSV output path (default stdout)");
    curve->add_option("--weights", cfg.weights, "Pauli direction p1,p2,p3 for the pauli family")->delimiter(',');
    curve->add_option("--seed", cfg.seed, "Seed (curves are deterministic)");

    auto *cert = app.add_subcommand("certify", "Search for a degrading or antidegrading map");
    cert->add_option("spec", cfg.input_path, "Channel spec JSON")->required();
    cert->add_option("--direction", cfg.direction, "deg | anti")->check(CLI::IsMember({"deg", "anti"}));
    cert->add_option("--tol", cfg.tol, "Residual tolerance")->default_val(1e-6);
    cert->add_option("--max-iters", cfg.max_iters, "Alternating projection iterations")->default_val(5000);
    cert->add_option("-o,--out", cfg.output_path, "Certificate JSON path (default stdout)");
    cert->add_option("--seed", cfg.seed, "Seed (certification is deterministic)");

    auto *verify = app.add_subcommand("verify", "Check a decomposition and report its cost");
    verify->add_option("decomposition", cfg.input_path, "Decomposition JSON")->required();
    verify->add_option("--tol", cfg.tol, "Choi residual tolerance")->default_val(1e-8);
    verify->add_flag("--allow-heuristic", cfg.allow_heuristic, "Permit optimized (non closed-form) Q1 values");
    verify->add_option("--seed", cfg.seed, "Seed for the Q1 optimizer");

    auto *decompose = app.add_subcommand("decompose", "Write a built-in decomposition as JSON");
    decompose->add_option("family", cfg.family, "bb84 | depolarizing | pauli")
        ->required()
        ->check(CLI::IsMember({"bb84", "depolarizing", "pauli"}));
    decompose->add_option("--param", cfg.param, "q for bb84, p for depolarizing");
    decompose->add_option("--weights", cfg.weights, "p1,p2,p3 for pauli")->delimiter(',');
    decompose->add_option("-o,--out", cfg.output_path, "Output path (default stdout)");

    auto *q1 = app.add_subcommand("q1", "Optimized coherent information of a channel");
    q1->add_option("spec", cfg.input_path, "Channel spec JSON")->required();
    q1->add_flag("--allow-heuristic", cfg.allow_heuristic, "Fall back to multi-restart optimization");
    q1->add_option("--seed", cfg.seed, "Optimizer seed");

    auto *info = app.add_subcommand("info", "Output/environment entropies and coherent information");
    info->add_option("spec", cfg.input_path, "Channel spec JSON")->required();
    info->add_option("--state", cfg.aux_path, "Input density matrix JSON (default maximally mixed)");

    auto *pinfo = app.add_subcommand("private-info", "Private information of an ensemble");
    pinfo->add_option("spec", cfg.input_path, "Channel spec JSON")->required();
    pinfo->add_option("ensemble", cfg.aux_path, "Ensemble JSON")->required();
    pinfo->add_option("--side-dim", cfg.side_dim, "Symmetric side-channel dimension (0 = none)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) {
            reversed.pop_back();
        }
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (curve->parsed()) {
            cfg.command = "curve";
            if (cfg.family == "bb84") {
                cfg.lo = lo_opt->count() ? cfg.lo : 0.0;
                cfg.hi = hi_opt->count() ? cfg.hi : 0.25;
                cfg.steps = steps_opt->count() ? cfg.steps : 1001;
            } else if (cfg.family == "depolarizing") {
                cfg.lo = lo_opt->count() ? cfg.lo : 0.0;
                cfg.hi = hi_opt->count() ? cfg.hi : 0.3;
                cfg.steps = steps_opt->count() ? cfg.steps : 601;
            } else {
                cfg.lo = lo_opt->count() ? cfg.lo : 0.0;
                cfg.hi = hi_opt->count() ? cfg.hi : 1.0;
                cfg.steps = steps_opt->count() ? cfg.steps : 1001;
                if (cfg.weights.empty()) {
                    cfg.weights = {1.0, 1.0, 1.0};
                }
            }
            validate_paths(cfg);
            return cmd_curve(cfg, out);
        }
        if (cert->parsed()) {
            cfg.command = "certify";
            validate_paths(cfg);
            return cmd_certify(cfg, out);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            validate_paths(cfg);
            return cmd_verify(cfg, out);
        }
        if (decompose->parsed()) {
            cfg.command = "decompose";
            validate_paths(cfg);
            return cmd_decompose(cfg, out);
        }
        if (q1->parsed()) {
            cfg.command = "q1";
            validate_paths(cfg);
            return cmd_q1(cfg, out);
        }
        if (info->parsed()) {
            cfg.command = "info";
            validate_paths(cfg);
            return cmd_info(cfg, out);
        }
        cfg.command = "private-info";
        validate_paths(cfg);
        return cmd_private_info(cfg, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace privcap
