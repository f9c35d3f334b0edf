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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "noisyamp/verify.h"

#ifndef NOISYAMP_CLI_PATH
#error "NOISYAMP_CLI_PATH must point at the command-line tool"
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

const char *kTitles[] = {
    "",
    "squeezer reaches det optimum (fock, 1e-4, < 30 s)",
    "identity channel formula (fock, 1e-6)",
    "filter converges to prob optimum (K sweep, < 60 s)",
    "measure-and-prepare meets benchmark (fock, 1e-4)",
    "benchmark below quantum optimum (margin >= 1e-6)",
    "probabilistic advantage window",
    "branch continuity (1e-12)",
    "circulant bound machinery",
    "photon bookkeeping",
    "verify --level fast: < 60 s, no failures, byte-identical",
};

const double kLimitSeconds[] = {0, 30, 0, 60, 0, 0, 0, 0, 0, 0, 60};

Outcome run_criterion(int id) {
    noisyamp::VerifyOptions opt;
    opt.level = noisyamp::VerifyLevel::Full;
    auto t0 = Clock::now();
    std::vector<noisyamp::Check> checks;
    try {
        checks = noisyamp::criterion_checks(id, opt);
    } catch (const std::exception &e) {
        return {false, std::string("threw: ") + e.what()};
    }
    double secs = seconds_since(t0);
    int failed = 0;
    std::string detail;
    for (const noisyamp::Check &c : checks) {
        if (!c.pass) {
            failed++;
            char buf[256];
            std::snprintf(buf, sizeof buf, "\n      %s: expected %.10g observed %.10g tol %.1e",
                          c.name.c_str(), c.expected, c.observed, c.tolerance);
            detail += buf;
        }
    }
    bool in_time = kLimitSeconds[id] == 0 || secs < kLimitSeconds[id];
    char head[128];
    std::snprintf(head, sizeof head, "%zu/%zu checks, %.1f s%s", checks.size() - failed,
                  checks.size(), secs, in_time ? "" : " (over time limit)");
    return {failed == 0 && in_time && !checks.empty(), head + detail};
}

// Runs the tool and captures stdout plus the exit status.
bool run_tool(const std::string &args, std::string *out, int *status) {
    std::string cmd = std::string("\"") + NOISYAMP_CLI_PATH + "\" " + args;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        return false;
    }
    std::array<char, 4096> buf;
    size_t n;
    out->clear();
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) {
        out->append(buf.data(), n);
    }
    int st = pclose(p);
    *status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return true;
}

Outcome run_determinism() {
    std::string a, b, text;
    int sa = -1, sb = -1, st = -1;
    auto t0 = Clock::now();
    if (!run_tool("verify --level fast --seed 7 --json", &a, &sa)) {
        return {false, "could not start the tool"};
    }
    double first = seconds_since(t0);
    run_tool("verify --level fast --seed 7 --json", &b, &sb);
    run_tool("verify --level fast", &text, &st);
    char buf[160];
    std::snprintf(buf, sizeof buf, "first run %.1f s, exit codes %d/%d/%d, %zu bytes, %s", first, sa,
                  sb, st, a.size(), a == b ? "identical" : "DIFFERENT");
    bool ok = sa == 0 && sb == 0 && st == 0 && a == b && !a.empty() && first < 60;
    return {ok, buf};
}

}  // namespace

int main() {
    int failures = 0;
    for (int id = 1; id <= 10; id++) {
        Outcome o = id == 10 ? run_determinism() : run_criterion(id);
        std::printf("%s criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, kTitles[id],
                    o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
