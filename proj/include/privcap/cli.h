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

#ifndef PRIVCAP_CLI_H
#define PRIVCAP_CLI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace privcap {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
};

struct RunConfig {
    std::string command;
    std::string family;
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
    double tol = 0.0;
    int max_iters = 5000;
    std::string input_path;
    std::string aux_path;
    std::string output_path;
    std::uint64_t seed = 0;
    std::string direction = "deg";
    bool allow_heuristic = false;
    std::vector<double> weights;
    double param = 0.0;
    int side_dim = 0;
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace privcap

#endif
