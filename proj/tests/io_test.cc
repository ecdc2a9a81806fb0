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

#include <gtest/gtest.h>

#include <sstream>

#include "privcap/error.h"
#include "test_util.h"

using namespace privcap;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::ParamOutOfRange;
}

}  // namespace

TEST(matrix_json, round_trip) {
    tu::Rng rng(1);
    Matrix m = tu::random_gaussian(3, 2, rng);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
}

TEST(matrix_json, malformed) {
    EXPECT_EQ(code_of([] { matrix_from_json(Json::parse("[]")); }), ErrorCode::BadSpec);
    EXPECT_EQ(code_of([] { matrix_from_json(Json::parse("[[1, 2]]")); }), ErrorCode::BadSpec);
    EXPECT_EQ(code_of([] { matrix_from_json(Json::parse("[[[1, 0]], [[1, 0], [0, 0]]]")); }), ErrorCode::BadSpec);
    EXPECT_EQ(code_of([] { matrix_from_json(Json::parse(R"([[["a", 0]]])")); }), ErrorCode::BadSpec);
}

TEST(channel_json, family_specs) {
    struct Case {
        const char *spec;
        Channel expected;
    };
    std::vector<Case> cases = {
        {R"({"type": "identity", "params": {"d": 3}})", make_identity(3)},
        {R"({"type": "amplitude_damping", "params": {"gamma": 0.3}})", make_amplitude_damping(0.3)},
        {R"({"type": "two_kraus", "params": {"gamma": 0.3, "delta": 0.1}})", make_two_kraus(0.3, 0.1)},
        {R"({"type": "pauli", "params": {"p1": 0.1, "p2": 0.0, "p3": 0.2}})", make_pauli(0.1, 0.0, 0.2)},
        {R"({"type": "dephasing", "params": {"p": 0.1}})", make_dephasing(0.1)},
        {R"({"type": "bitflip", "params": {"p": 0.1}})", make_bitflip(0.1)},
        {R"({"type": "depolarizing", "params": {"p": 0.25}})", make_depolarizing(0.25)},
        {R"({"type": "erasure", "params": {"p": 0.25, "d": 2}})", make_erasure(0.25, 2)},
        {R"({"type": "symmetric", "params": {"d": 2}})", make_symmetric(2)},
    };
    for (const auto &c : cases) {
        Channel got = channel_from_json(Json::parse(c.spec));
        EXPECT_LE(choi_distance(got, c.expected), 1e-15) << c.spec;
        EXPECT_TRUE(got.family().has_value()) << c.spec;
    }
}

TEST(channel_json, kraus_spec) {
    Json j = Json::parse(R"({"type": "kraus", "matrices": [[[[1, 0], [0, 0]], [[0, 0], [1, 0]]]]})");
    EXPECT_LE(choi_distance(channel_from_json(j), make_identity(2)), 1e-15);
}

TEST(channel_json, round_trip_preserves_channel_and_family) {
    tu::Rng rng(2);
    std::vector<Channel> channels = {make_amplitude_damping(0.2),
                                     conjugate(make_amplitude_damping(0.4), tu::random_unitary(2, rng),
                                               tu::random_unitary(2, rng)),
                                     make_erasure(0.1, 3), tu::random_channel(2, 3, 2, rng)};
    for (const auto &c : channels) {
        Json j = channel_to_json(c);
        Channel back = channel_from_json(Json::parse(j.dump()));
        EXPECT_LE(choi_distance(back, c), 1e-12);
        EXPECT_EQ(back.family().has_value(), c.family().has_value());
    }
}

TEST(channel_json, strict_validation) {
    for (const char *spec : {
             R"([])",
             R"({"params": {"gamma": 0.3}})",
             R"({"type": "teleporter", "params": {}})",
             R"({"type": "amplitude_damping", "params": {"gamma": 0.3, "extra": 1}})",
             R"({"type": "amplitude_damping", "params": {}})",
             R"({"type": "amplitude_damping", "params": {"gamma": "0.3"}})",
             R"({"type": "amplitude_damping", "params": {"gamma": 0.3}, "note": "x"})",
             R"({"type": "identity", "params": {"d": 2.5}})",
             R"({"type": "identity", "params": {"d": 0}})",
         }) {
        EXPECT_EQ(code_of([&] { channel_from_json(Json::parse(spec)); }), ErrorCode::BadSpec) << spec;
    }
    EXPECT_EQ(code_of([] { channel_from_json(Json::parse(R"({"type": "amplitude_damping", "params": {"gamma": 2}})")); }),
              ErrorCode::ParamOutOfRange);
    EXPECT_EQ(code_of([] {
                  channel_from_json(Json::parse(R"({"type": "kraus", "matrices": [[[[1, 0], [0, 0]], [[0, 0], [0.5, 0]]]]})"));
              }),
              ErrorCode::NotTracePreserving);
}

TEST(ensemble_json, round_trip) {
    tu::Rng rng(3);
    CQEnsemble e{{0.25, 0.75}, {tu::random_state(2, rng), tu::random_state(2, rng)}, Eigen::MatrixXd::Identity(2, 2)};
    CQEnsemble back = ensemble_from_json(Json::parse(ensemble_to_json(e).dump()));
    EXPECT_EQ(back.probs, e.probs);
    ASSERT_TRUE(back.processing.has_value());
    EXPECT_EQ(*back.processing, *e.processing);
    for (std::size_t i = 0; i < e.states.size(); ++i) {
        EXPECT_EQ(back.states[i].matrix(), e.states[i].matrix());
    }
}

TEST(ensemble_json, rejects_non_states) {
    Json j = Json::parse(R"({"probs": [1.0], "states": [[[[2, 0], [0, 0]], [[0, 0], [0, 0]]]]})");
    EXPECT_EQ(code_of([&] { ensemble_from_json(j); }), ErrorCode::NotAState);
}

TEST(certificate_json, round_trip_reverifies) {
    Channel c = make_amplitude_damping(0.3);
    CertifyOutcome o = certify_degradable(c);
    ASSERT_TRUE(o.certified());
    Json j = Json::parse(certificate_to_json(*o.certificate).dump());
    EXPECT_EQ(j.at("direction"), "degradable");
    DegradingCertificate back = load_certificate(j, c, 1e-6);
    EXPECT_NEAR(back.residual, o.certificate->residual, 1e-12);
    EXPECT_EQ(back.direction, Direction::Degradable);
}

TEST(certificate_json, tampered_certificate_rejected) {
    Channel c = make_amplitude_damping(0.3);
    DegradingCertificate cert{Direction::Degradable, make_identity(2), 0.0, 0};
    Json j = certificate_to_json(cert);
    EXPECT_EQ(code_of([&] { load_certificate(j, c, 1e-6); }), ErrorCode::BadSpec);
    j["direction"] = "sideways";
    EXPECT_EQ(code_of([&] { load_certificate(j, c, 1e-6); }), ErrorCode::BadSpec);
}

TEST(decomposition_json, round_trip) {
    Decomposition d = bb84_ampdamp_decomposition(0.1);
    d.parts[1].post = make_identity(2);
    Decomposition back = decomposition_from_json(Json::parse(decomposition_to_json(d).dump()));
    ASSERT_EQ(back.parts.size(), 2u);
    EXPECT_LE(verify_decomposition(back), 1e-10);
    EXPECT_TRUE(back.parts[1].post.has_value());
    EXPECT_FALSE(back.parts[0].post.has_value());
    EXPECT_NEAR(decomposition_cost(back).cost, decomposition_cost(d).cost, 1e-12);
}

TEST(curve_csv, header_and_precision) {
    BoundCurve c = bb84_upper_bound({0.0, 0.1});
    std::ostringstream out;
    write_curve_csv(out, c);
    std::istringstream in(out.str());
    std::string header, row0, row1;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    EXPECT_EQ(header, "q,dephasing,ampdamp,envelope");
    EXPECT_EQ(row0.substr(0, 2), "0,");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}
