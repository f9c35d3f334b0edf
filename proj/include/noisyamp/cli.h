// Copyright 2026 The noisyamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOISYAMP_CLI_H_
#define NOISYAMP_CLI_H_

#include <string>
#include <vector>

#include "noisyamp/params.h"

namespace noisyamp {

inline constexpr const char *kToolName = "noisyamp";
inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitUsage = 2, kExitDomain = 3, kExitIo = 4, kExitVerify = 5 };

enum class SweepAxis { G, Lambda, Mu, N, M };

struct SweepSpec {
    SweepAxis axis = SweepAxis::G;
    double start = 0;
    double stop = 1;
    int steps = 2;
    MultimodeTask fixed;

    void validate() const;
    /// Task at step i; integer axes round to the nearest count.
    MultimodeTask at(int i, double *axis_value) const;
};

extern const char *const kSweepHeader;

/// CSV body (header plus one row per step) for a sweep.
std::string sweep_csv(const SweepSpec &spec);

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Parses and runs one command line; args excludes the program name.
CommandResult run_cli(const std::vector<std::string> &args);

}  // namespace noisyamp

#endif  // NOISYAMP_CLI_H_
