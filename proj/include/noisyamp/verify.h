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

#ifndef NOISYAMP_VERIFY_H
#define NOISYAMP_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace noisyamp {

enum class CheckKind {
    /// |observed - expected| <= tolerance (times |expected| when relative).
    Near,
    /// observed <= expected + tolerance.
    AtMost,
    /// observed >= expected - tolerance.
    AtLeast,
    /// observed > expected.
    Above,
};

struct Check {
    std::string name;
    /// Acceptance criterion number, 0 for supplementary checks.
    int criterion;
    CheckKind kind;
    double expected;
    double observed;
    double tolerance;
    bool relative;
    bool pass;
    double wall_time_ms;
};

Check make_check(std::string name, int criterion, CheckKind kind, double expected,
                 double observed, double tolerance, bool relative = false);

enum class VerifyLevel { Fast, Full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Fast;
    std::uint64_t seed = 1;
    /// Base Fock cutoff.
    int dim = 64;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool all_pass() const;
    int failures() const;
};

/// Checks for one acceptance criterion (1..9) or the supplementary set (0).
std::vector<Check> criterion_checks(int criterion, const VerifyOptions &opt);

VerifyReport run_verify(const VerifyOptions &opt);

/// Deterministic text table; timings only when asked.
std::string render_report_text(const VerifyReport &r, bool timings);

const char *check_kind_name(CheckKind k);

}  // namespace noisyamp

#endif
