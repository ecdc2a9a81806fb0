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

#ifndef PRIVCAP_IO_H
#define PRIVCAP_IO_H

#include <ostream>
#include <string>

#include "json.hpp"
#include "privcap/bounds.h"
#include "privcap/certify.h"
#include "privcap/channel.h"
#include "privcap/info.h"

namespace privcap {

using Json = nlohmann::json;

// Matrices are row lists of [re, im] pairs. All parsers are strict: unknown
// fields, missing fields and wrong types raise BadSpec.

Matrix matrix_from_json(const Json &j);
Json matrix_to_json(const Matrix &m);

/// {"type": "kraus", "matrices": [...]} or {"type": <family>, "params": {...}}.
/// Families: identity{d}, amplitude_damping{gamma}, two_kraus{gamma,delta},
/// pauli{p1,p2,p3}, dephasing{p}, bitflip{p}, depolarizing{p}, erasure{p,d},
/// symmetric{d}, bb84{q}, conjugate{channel,pre,post}.
Channel channel_from_json(const Json &j, const Limits &limits = {});
/// Family-tagged channels are written structurally, others as Kraus lists.
Json channel_to_json(const Channel &c);

/// {"probs": [...], "states": [matrix, ...], "processing": [[...]]}.
CQEnsemble ensemble_from_json(const Json &j);
Json ensemble_to_json(const CQEnsemble &e);

/// {"direction", "degrading_map", "residual", "iterations"}.
Json certificate_to_json(const DegradingCertificate &cert);
/// Parses and re-verifies against `c`; the returned residual is the recomputed
/// one. Throws BadSpec if it exceeds tol.
DegradingCertificate load_certificate(const Json &j, const Channel &c, double tol);

/// {"target": spec, "parts": [{"prob", "inner", "post"?}, ...]}.
Decomposition decomposition_from_json(const Json &j, const Limits &limits = {});
Json decomposition_to_json(const Decomposition &d);

/// Header row then one row per sample, 17 significant digits.
void write_curve_csv(std::ostream &out, const BoundCurve &curve);
std::string format_double(double x);

}  // namespace privcap

#endif
