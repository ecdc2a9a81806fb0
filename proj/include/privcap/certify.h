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

#ifndef PRIVCAP_CERTIFY_H
#define PRIVCAP_CERTIFY_H

#include <optional>
#include <string_view>
#include <vector>

#include "privcap/channel.h"

namespace privcap {

enum class Direction { Degradable, Antidegradable };

std::string_view direction_name(Direction d);

/// A degrading map D with D∘N = N̂ (degradable) or D∘N̂ = N (antidegradable),
/// where N̂ is the complement of the Kraus-minimized channel.
struct DegradingCertificate {
    Direction direction;
    Channel degrading_map;
    double residual;
    int iterations;
};

struct CertifyOptions {
    double tol = 1e-6;
    int max_iters = 5000;
    /// Iterations between full residual evaluations.
    int check_every = 10;
    Limits limits = {};
};

/// CERTIFIED when `certificate` is set; otherwise UNKNOWN. UNKNOWN never means
/// the map does not exist.
struct CertifyOutcome {
    std::optional<DegradingCertificate> certificate;
    double best_residual;
    int iterations;
    /// Best residual after each check; non-increasing.
    std::vector<double> residual_trace;

    bool certified() const {
        return certificate.has_value();
    }
};

CertifyOutcome certify(const Channel &c, Direction direction, const CertifyOptions &options = {});
CertifyOutcome certify_degradable(const Channel &c, const CertifyOptions &options = {});
CertifyOutcome certify_antidegradable(const Channel &c, const CertifyOptions &options = {});

/// Recomputes the Choi trace distance of the asserted identity from scratch.
double verify_certificate(const Channel &c, const DegradingCertificate &cert);

}  // namespace privcap

#endif
