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

#include "privcap/io.h"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <set>

#include "privcap/error.h"

namespace privcap {
namespace {

[[noreturn]] void bad(const std::string &message) {
    throw Error(ErrorCode::BadSpec, message);
}

void require_object(const Json &j, std::initializer_list<const char *> required,
                    std::initializer_list<const char *> optional, const std::string &what) {
    if (!j.is_object()) {
        bad(what + " must be a JSON object");
    }
    std::set<std::string> allowed;
    for (const char *k : required) {
        if (!j.contains(k)) {
            bad(what + " is missing field '" + k + "'");
        }
        allowed.insert(k);
    }
    for (const char *k : optional) {
        allowed.insert(k);
    }
    for (const auto &item : j.items()) {
        if (!allowed.count(item.key())) {
            bad(what + " has unknown field '" + item.key() + "'");
        }
    }
}

double number(const Json &j, const std::string &what) {
    if (!j.is_number()) {
        bad(what + " must be a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        bad(what + " must be finite");
    }
    return v;
}

std::size_t dimension(const Json &j, const std::string &what) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        bad(what + " must be a positive integer");
    }
    return static_cast<std::size_t>(j.get<long long>());
}

double param(const Json &params, const char *key) {
    return number(params.at(key), std::string("params.") + key);
}

Json family_spec(const Family &f) {
    Json params;
    const auto &p = f.params;
    switch (f.kind) {
        case FamilyKind::Identity:
            return Json{{"type", "identity"}, {"params", {{"d", static_cast<long long>(p.at(0))}}}};
        case FamilyKind::AmplitudeDamping:
            return Json{{"type", "amplitude_damping"}, {"params", {{"gamma", p.at(0)}}}};
        case FamilyKind::TwoKraus:
            return Json{{"type", "two_kraus"}, {"params", {{"gamma", p.at(0)}, {"delta", p.at(1)}}}};
        case FamilyKind::Pauli:
            return Json{{"type", "pauli"}, {"params", {{"p1", p.at(0)}, {"p2", p.at(1)}, {"p3", p.at(2)}}}};
        case FamilyKind::Erasure:
            return Json{{"type", "erasure"},
                        {"params", {{"p", p.at(0)}, {"d", static_cast<long long>(p.at(1))}}}};
        case FamilyKind::Symmetric:
            return Json{{"type", "symmetric"}, {"params", {{"d", static_cast<long long>(p.at(0))}}}};
    }
    bad("unknown channel family");
}

}  // namespace

Matrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        bad("matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) {
        bad("matrix rows must be non-empty arrays");
    }
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            bad("matrix rows must all have the same length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Json &entry = j[r][c];
            if (!entry.is_array() || entry.size() != 2) {
                bad("matrix entries must be [re, im] pairs");
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(number(entry[0], "real part"), number(entry[1], "imaginary part"));
        }
    }
    return m;
}

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Channel channel_from_json(const Json &j, const Limits &limits) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        bad("channel spec needs a string 'type'");
    }
    const std::string type = j.at("type").get<std::string>();
    if (type == "kraus") {
        require_object(j, {"type", "matrices"}, {}, "kraus channel spec");
        const Json &mats = j.at("matrices");
        if (!mats.is_array() || mats.empty()) {
            bad("'matrices' must be a non-empty array");
        }
        std::vector<Matrix> kraus;
        for (const auto &m : mats) {
            kraus.push_back(matrix_from_json(m));
        }
        return make_channel(std::move(kraus));
    }
    require_object(j, {"type", "params"}, {}, type + " channel spec");
    const Json &params = j.at("params");
    auto fields = [&](std::initializer_list<const char *> names) {
        require_object(params, names, {}, type + " params");
    };
    if (type == "identity") {
        fields({"d"});
        return make_identity(dimension(params.at("d"), "params.d"));
    }
    if (type == "amplitude_damping") {
        fields({"gamma"});
        return make_amplitude_damping(param(params, "gamma"));
    }
    if (type == "two_kraus") {
        fields({"gamma", "delta"});
        return make_two_kraus(param(params, "gamma"), param(params, "delta"));
    }
    if (type == "pauli") {
        fields({"p1", "p2", "p3"});
        return make_pauli(param(params, "p1"), param(params, "p2"), param(params, "p3"));
    }
    if (type == "dephasing") {
        fields({"p"});
        return make_dephasing(param(params, "p"));
    }
    if (type == "bitflip") {
        fields({"p"});
        return make_bitflip(param(params, "p"));
    }
    if (type == "depolarizing") {
        fields({"p"});
        return make_depolarizing(param(params, "p"));
    }
    if (type == "erasure") {
        fields({"p", "d"});
        return make_erasure(param(params, "p"), dimension(params.at("d"), "params.d"));
    }
    if (type == "symmetric") {
        fields({"d"});
        return make_symmetric(dimension(params.at("d"), "params.d"), limits);
    }
    if (type == "bb84") {
        fields({"q"});
        return bb84_channel(param(params, "q"));
    }
    if (type == "conjugate") {
        fields({"channel", "pre", "post"});
        Channel inner = channel_from_json(params.at("channel"), limits);
        return conjugate(inner, matrix_from_json(params.at("pre")), matrix_from_json(params.at("post")));
    }
    bad("unknown channel type '" + type + "'");
}

Json channel_to_json(const Channel &c) {
    if (c.family()) {
        const Family &f = *c.family();
        Json base = family_spec(f);
        if (f.pre.size() == 0 && f.post.size() == 0) {
            return base;
        }
        const auto din = static_cast<Eigen::Index>(c.din());
        const auto dout = static_cast<Eigen::Index>(c.dout());
        Matrix pre = f.pre.size() == 0 ? Matrix(Matrix::Identity(din, din)) : f.pre;
        Matrix post = f.post.size() == 0 ? Matrix(Matrix::Identity(dout, dout)) : f.post;
        return Json{{"type", "conjugate"},
                    {"params", {{"channel", base}, {"pre", matrix_to_json(pre)}, {"post", matrix_to_json(post)}}}};
    }
    Json mats = Json::array();
    for (const auto &k : c.kraus()) {
        mats.push_back(matrix_to_json(k));
    }
    return Json{{"type", "kraus"}, {"matrices", std::move(mats)}};
}

CQEnsemble ensemble_from_json(const Json &j) {
    require_object(j, {"probs", "states"}, {"processing"}, "ensemble");
    CQEnsemble e;
    if (!j.at("probs").is_array() || !j.at("states").is_array()) {
        bad("'probs' and 'states' must be arrays");
    }
    for (const auto &p : j.at("probs")) {
        e.probs.push_back(number(p, "probability"));
    }
    for (const auto &s : j.at("states")) {
        e.states.push_back(DensityMatrix::from_matrix(matrix_from_json(s)));
    }
    if (j.contains("processing")) {
        const Json &rows = j.at("processing");
        if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
            bad("'processing' must be a non-empty array of rows");
        }
        Eigen::MatrixXd p(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
        for (std::size_t t = 0; t < rows.size(); ++t) {
            if (!rows[t].is_array() || rows[t].size() != rows[0].size()) {
                bad("'processing' rows must have equal length");
            }
            for (std::size_t x = 0; x < rows[t].size(); ++x) {
                p(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(x)) = number(rows[t][x], "processing entry");
            }
        }
        e.processing = std::move(p);
    }
    validate_ensemble(e);
    return e;
}

Json ensemble_to_json(const CQEnsemble &e) {
    Json j;
    j["probs"] = e.probs;
    Json states = Json::array();
    for (const auto &s : e.states) {
        states.push_back(matrix_to_json(s.matrix()));
    }
    j["states"] = std::move(states);
    if (e.processing) {
        Json rows = Json::array();
        for (Eigen::Index t = 0; t < e.processing->rows(); ++t) {
            Json row = Json::array();
            for (Eigen::Index x = 0; x < e.processing->cols(); ++x) {
                row.push_back((*e.processing)(t, x));
            }
            rows.push_back(std::move(row));
        }
        j["processing"] = std::move(rows);
    }
    return j;
}

Json certificate_to_json(const DegradingCertificate &cert) {
    return Json{{"direction", std::string(direction_name(cert.direction))},
                {"degrading_map", channel_to_json(cert.degrading_map)},
                {"residual", cert.residual},
                {"iterations", cert.iterations}};
}

DegradingCertificate load_certificate(const Json &j, const Channel &c, double tol) {
    require_object(j, {"direction", "degrading_map", "residual"}, {"iterations"}, "certificate");
    if (!j.at("direction").is_string()) {
        bad("'direction' must be a string");
    }
    const std::string dir = j.at("direction").get<std::string>();
    Direction direction;
    if (dir == "degradable") {
        direction = Direction::Degradable;
    } else if (dir == "antidegradable") {
        direction = Direction::Antidegradable;
    } else {
        bad("unknown direction '" + dir + "'");
    }
    int iterations = 0;
    if (j.contains("iterations")) {
        if (!j.at("iterations").is_number_integer()) {
            bad("'iterations' must be an integer");
        }
        iterations = j.at("iterations").get<int>();
    }
    number(j.at("residual"), "residual");
    DegradingCertificate cert{direction, channel_from_json(j.at("degrading_map")), 0.0, iterations};
    cert.residual = verify_certificate(c, cert);
    if (!(cert.residual <= tol)) {
        bad("certificate does not verify: residual " + std::to_string(cert.residual));
    }
    return cert;
}

Decomposition decomposition_from_json(const Json &j, const Limits &limits) {
    require_object(j, {"target", "parts"}, {}, "decomposition");
    const Json &parts = j.at("parts");
    if (!parts.is_array()) {
        bad("'parts' must be an array");
    }
    Decomposition d{{}, channel_from_json(j.at("target"), limits)};
    for (const auto &part : parts) {
        require_object(part, {"prob", "inner"}, {"post"}, "decomposition part");
        std::optional<Channel> post;
        if (part.contains("post")) {
            post = channel_from_json(part.at("post"), limits);
        }
        d.parts.push_back({number(part.at("prob"), "prob"), channel_from_json(part.at("inner"), limits),
                           std::move(post), std::nullopt});
    }
    return d;
}

Json decomposition_to_json(const Decomposition &d) {
    Json parts = Json::array();
    for (const auto &part : d.parts) {
        Json p{{"prob", part.prob}, {"inner", channel_to_json(part.inner)}};
        if (part.post) {
            p["post"] = channel_to_json(*part.post);
        }
        parts.push_back(std::move(p));
    }
    return Json{{"target", channel_to_json(d.target)}, {"parts", std::move(parts)}};
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_curve_csv(std::ostream &out, const BoundCurve &curve) {
    out << curve.parameter_name;
    for (const auto &name : curve.component_names) {
        out << ',' << name;
    }
    out << ",envelope\n";
    for (const auto &s : curve.samples) {
        out << format_double(s.x);
        for (double v : s.components) {
            out << ',' << format_double(v);
        }
        out << ',' << format_double(s.envelope) << '\n';
    }
}

}  // namespace privcap
