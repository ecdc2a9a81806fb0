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

#ifndef PRIVCAP_LIMITS_H
#define PRIVCAP_LIMITS_H

#include <cstddef>

namespace privcap {

/// Size caps guarding the dense numerics. The CLI reads PRIVCAP_MAX_DIM to
/// override every dimension cap at once.
struct Limits {
    std::size_t max_kraus = 4096;
    std::size_t max_symmetric_dim = 8;
    std::size_t max_optimize_dim = 8;
    std::size_t max_certify_dim = 6;

    static Limits from_env();
};

}  // namespace privcap

#endif
