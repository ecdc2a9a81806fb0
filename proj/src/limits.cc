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

#include "privcap/limits.h"

#include <cstdlib>
#include <string>

#include "privcap/error.h"

namespace privcap {

Limits Limits::from_env() {
    Limits limits;
    const char *raw = std::getenv("PRIVCAP_MAX_DIM");
    if (raw == nullptr || *raw == '\0') {
        return limits;
    }
    char *end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1) {
        throw Error(ErrorCode::BadSpec, "PRIVCAP_MAX_DIM must be a positive integer, got '" + std::string(raw) + "'");
    }
    auto cap = static_cast<std::size_t>(value);
    limits.max_symmetric_dim = cap;
    limits.max_optimize_dim = cap;
    limits.max_certify_dim = cap;
    return limits;
}

}  // namespace privcap
