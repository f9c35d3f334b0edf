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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "noisyamp/cli.h"
#include "noisyamp/verify.h"

namespace noisyamp {
namespace {

std::vector<std::string> split_lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.push_back("");
    }
    return out;
}

TEST(CliEval, WorkedPoint) {
    CommandResult r = run_cli({"eval", "--lambda", "1", "--mu", "1", "--g", "2", "--n", "1", "--m", "1"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("det=0.33333"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("cft=0.27273"), std::string::npos) << r.out;
    // g' = 2 = 1 + N_T/N_C is where the tuned filter gain is one, so the
    // probabilistic optimum equals the deterministic one.
    EXPECT_NE(r.out.find("prob=0.33333"), std::string::npos) << r.out;
    CommandResult mid = run_cli({"eval", "--lambda", "1", "--mu", "1", "--g", "1.5"});
    EXPECT_NE(mid.out.find("prob=0.47059"), std::string::npos) << mid.out;
}

TEST(CliEval, PureInputs) {
    CommandResult r = run_cli({"eval", "--lambda", "1", "--mu", "1e15", "--g", "1", "--json"});
    ASSERT_EQ(r.exit_code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["result"]["f_prob"].get<double>(), 1, 1e-12);
    EXPECT_NEAR(j["result"]["f_det"].get<double>(), 1, 1e-12);
    EXPECT_EQ(j["tool"], "noisyamp");
    EXPECT_EQ(j["version"], kToolVersion);
    EXPECT_EQ(j["params"]["mu"].get<double>(), 1e15);
}

TEST(CliEval, ReductionPrinted) {
    CommandResult r = run_cli({"eval", "--lambda", "2", "--mu", "1", "--g", "1", "--n", "2", "--m", "1"});
    EXPECT_NE(r.out.find("g'=0.70711"), std::string::npos) << r.out;
}

TEST(CliEval, ExitCodes) {
    EXPECT_EQ(run_cli({"eval", "--lambda", "-1"}).exit_code, kExitUsage);
    EXPECT_EQ(run_cli({"eval", "--bogus"}).exit_code, kExitUsage);
    EXPECT_EQ(run_cli({}).exit_code, kExitUsage);
    EXPECT_EQ(run_cli({"eval", "--n", "0"}).exit_code, kExitUsage);
    EXPECT_EQ(run_cli({"photons", "--g", "0.5"}).exit_code, kExitDomain);
    EXPECT_EQ(run_cli({"photons", "--mode", "prob", "--y", "2", "--mu", "1"}).exit_code, kExitDomain);
    EXPECT_EQ(run_cli({"--help"}).exit_code, 0);
}

TEST(CliSweep, HeaderAndRows) {
    CommandResult r = run_cli({"sweep", "--axis", "g", "--start", "1", "--stop", "4", "--steps", "13"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 14u);
    EXPECT_EQ(lines[0], kSweepHeader);
    for (size_t i = 1; i < lines.size(); i++) {
        auto cells = split_csv(lines[i]);
        ASSERT_EQ(cells.size(), 10u) << lines[i];
        double g = std::stod(cells[0]);
        if (g >= 3) {
            EXPECT_EQ(cells[2], cells[3]) << lines[i];
        }
        for (int c : {0, 1, 2, 3, 4, 9}) {
            EXPECT_TRUE(std::isfinite(std::stod(cells[c])));
        }
    }
}

TEST(CliSweep, PurificationColumnsCoincide) {
    CommandResult r = run_cli({"sweep", "--axis", "g", "--start", "0.1", "--stop", "1", "--steps", "10"});
    auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 11u);
    for (size_t i = 1; i < lines.size(); i++) {
        auto cells = split_csv(lines[i]);
        EXPECT_EQ(cells[2], cells[3]);
        EXPECT_EQ(cells[5], "Purify");
        EXPECT_TRUE(cells[6].empty() || std::stod(cells[1]) == 1);
    }
}

TEST(CliSweep, TwoStepsTwoRows) {
    CommandResult r = run_cli({"sweep", "--axis", "mu", "--start", "0.5", "--stop", "2", "--steps", "2"});
    EXPECT_EQ(split_lines(r.out).size(), 3u);
    CommandResult n = run_cli({"sweep", "--axis", "n", "--start", "1", "--stop", "4", "--steps", "4"});
    auto lines = split_lines(n.out);
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(split_csv(lines[2])[0], "2");
}

TEST(CliSweep, OutOfRegimeCellsEmpty) {
    CommandResult r = run_cli({"sweep", "--axis", "g", "--start", "0.5", "--stop", "2", "--steps", "2"});
    auto lines = split_lines(r.out);
    auto lo = split_csv(lines[1]);
    EXPECT_TRUE(lo[6].empty());
    EXPECT_TRUE(lo[7].empty());
    EXPECT_FALSE(lo[8].empty());
    auto hi = split_csv(lines[2]);
    EXPECT_FALSE(hi[6].empty());
    EXPECT_FALSE(hi[7].empty());
    EXPECT_TRUE(hi[8].empty());
}

TEST(CliSweep, WritesFileAndReportsIoFailure) {
    std::string path = ::testing::TempDir() + "/noisyamp_sweep.csv";
    CommandResult r = run_cli({"sweep", "--axis", "lambda", "--start", "0.5", "--stop", "2", "--steps", "3",
                               "--out", path});
    ASSERT_EQ(r.exit_code, 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(split_lines(ss.str()).size(), 4u);
    std::remove(path.c_str());
    CommandResult bad = run_cli({"sweep", "--axis", "g", "--start", "1", "--stop", "2", "--steps", "2",
                                 "--out", "/nonexistent-dir/x.csv"});
    EXPECT_EQ(bad.exit_code, kExitIo);
}

TEST(CliSweep, RejectsBadSpecs) {
    EXPECT_EQ(run_cli({"sweep", "--axis", "g", "--start", "2", "--stop", "1", "--steps", "3"}).exit_code,
              kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--axis", "g", "--start", "1", "--stop", "2", "--steps", "1"}).exit_code,
              kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--axis", "q", "--start", "1", "--stop", "2", "--steps", "3"}).exit_code,
              kExitUsage);
}

TEST(CliSweep, JsonRows) {
    CommandResult r = run_cli({"sweep", "--axis", "g", "--start", "0.5", "--stop", "2", "--steps", "4", "--json"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["result"]["rows"].size(), 4u);
    EXPECT_TRUE(j["result"]["rows"][0]["cosh_r"].is_null());
    EXPECT_EQ(j["params"]["axis"], "g");
}

TEST(CliPhotons, DetWorkedPoint) {
    CommandResult r = run_cli({"photons", "--lambda", "0.5", "--mu", "2", "--g", "2"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("N'_single  0.95918"), std::string::npos) << r.out;
}

TEST(CliPhotons, UnitFilterNoChange) {
    CommandResult r = run_cli({"photons", "--mode", "prob", "--y", "1", "--mu", "2", "--g", "1.3", "--json"});
    ASSERT_EQ(r.exit_code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["result"]["n_t_out"].get<double>(), 0.5, 1e-15);
    EXPECT_TRUE(j["result"]["no_change"].get<bool>());
}

TEST(CliPhotons, IdentityBelowThreshold) {
    CommandResult r = run_cli({"photons", "--lambda", "1", "--mu", "1", "--g", "1.5"});
    EXPECT_NE(r.out.find("identity channel"), std::string::npos);
    EXPECT_NE(r.out.find("N'_single  1\n"), std::string::npos) << r.out;
}

TEST(CliRegimes, Thresholds) {
    CommandResult r = run_cli({"regimes", "--lambda", "1", "--mu", "1", "--g", "2", "--json"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(j["result"]["det_threshold_g_prime"].get<double>(), 3);
    EXPECT_NEAR(j["result"]["prob_threshold_g_prime"].get<double>(), std::sqrt(6.0), 1e-14);
    EXPECT_EQ(j["result"]["regime"], "DetIdentity");
    CommandResult t = run_cli({"regimes", "--n", "4", "--m", "1"});
    EXPECT_NE(t.out.find("Purify"), std::string::npos);
}

TEST(CliDeterminism, RepeatedOutputsIdentical) {
    std::vector<std::string> args{"sweep", "--axis", "g", "--start", "0.2", "--stop", "5", "--steps", "50"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
    std::vector<std::string> ev{"eval", "--lambda", "0.7", "--mu", "3", "--g", "1.9", "--json"};
    EXPECT_EQ(run_cli(ev).out, run_cli(ev).out);
}

TEST(VerifyChecks, KindsAndRelativeTolerance) {
    EXPECT_TRUE(make_check("a", 0, CheckKind::Near, 1, 1.05, 0.1).pass);
    EXPECT_FALSE(make_check("a", 0, CheckKind::Near, 1, 1.2, 0.1).pass);
    EXPECT_TRUE(make_check("a", 0, CheckKind::Near, 100, 101, 0.02, true).pass);
    EXPECT_FALSE(make_check("a", 0, CheckKind::Near, 100, 103, 0.02, true).pass);
    EXPECT_TRUE(make_check("a", 0, CheckKind::AtMost, 1, 1.05, 0.1).pass);
    EXPECT_FALSE(make_check("a", 0, CheckKind::AtLeast, 1, 0.8, 0.1).pass);
    EXPECT_FALSE(make_check("a", 0, CheckKind::Above, 0, 0, 1).pass);
    EXPECT_FALSE(make_check("a", 0, CheckKind::Near, 0, std::nan(""), 1).pass);
}

TEST(VerifyChecks, CheapCriteriaPass) {
    VerifyOptions o;
    for (int c : {5, 6, 7}) {
        for (const Check &k : criterion_checks(c, o)) {
            EXPECT_TRUE(k.pass) << k.name << " observed " << k.observed;
        }
    }
}

TEST(VerifyChecks, SeedSelectsSamples) {
    VerifyOptions a, b;
    a.seed = 1;
    b.seed = 7;
    auto ca = criterion_checks(6, a), cb = criterion_checks(6, b);
    auto ca2 = criterion_checks(6, a);
    EXPECT_EQ(ca[0].observed, ca2[0].observed);
    EXPECT_NE(ca[0].observed, cb[0].observed);
}

}  // namespace
}  // namespace noisyamp
