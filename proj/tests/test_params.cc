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

#include "noisyamp/errors.h"
#include "noisyamp/params.h"

namespace noisyamp {
namespace {

TEST(Reduce, SingleCopyIsIdentity) {
    NoisyEnsemble e = reduce({1, 1, 1, 1, 1});
    EXPECT_DOUBLE_EQ(e.lambda_prime, 1);
    EXPECT_DOUBLE_EQ(e.mu, 1);
    EXPECT_DOUBLE_EQ(e.g_prime, 1);
    for (double l : {0.3, 2.0}) {
        for (double g : {0.0, 1.7}) {
            NoisyEnsemble r = reduce({l, 3, g, 1, 1});
            EXPECT_EQ(r.lambda_prime, l);
            EXPECT_EQ(r.g_prime, g);
        }
    }
}

TEST(Reduce, TwoInputsOneOutput) {
    NoisyEnsemble e = reduce({2, 1, 1, 2, 1});
    EXPECT_DOUBLE_EQ(e.lambda_prime, 1);
    EXPECT_NEAR(e.g_prime, 1 / std::sqrt(2.0), 1e-15);
}

TEST(Reduce, FourInputs) {
    NoisyEnsemble e = reduce({1, 0.5, 2, 4, 1});
    EXPECT_DOUBLE_EQ(e.lambda_prime, 0.25);
    EXPECT_DOUBLE_EQ(e.mu, 0.5);
    EXPECT_DOUBLE_EQ(e.g_prime, 1);
}

TEST(Reduce, RejectsInvalidTasks) {
    EXPECT_THROW(reduce({0, 1, 1, 1, 1}), InvalidArgument);
    EXPECT_THROW(reduce({1, -1, 1, 1, 1}), InvalidArgument);
    EXPECT_THROW(reduce({1, 1, -0.1, 1, 1}), InvalidArgument);
    EXPECT_THROW(reduce({1, 1, 1, 0, 1}), InvalidArgument);
    EXPECT_THROW(reduce({1, 1, 1, 1, 0}), InvalidArgument);
}

TEST(PhotonBook, Reciprocals) {
    PhotonBook a = photon_book({1, 1, 1});
    EXPECT_DOUBLE_EQ(a.n_c, 1);
    EXPECT_DOUBLE_EQ(a.n_t, 1);
    EXPECT_DOUBLE_EQ(a.n_t_tilde, 2);
    PhotonBook b = photon_book({0.5, 2, 1});
    EXPECT_DOUBLE_EQ(b.n_c, 2);
    EXPECT_DOUBLE_EQ(b.n_t, 0.5);
    EXPECT_DOUBLE_EQ(b.n_t_tilde, 1.5);
}

TEST(PhotonBook, LargeMuIsPure) {
    PhotonBook pb = photon_book({0.25, 1e13, 1});
    EXPECT_DOUBLE_EQ(pb.n_c, 4);
    EXPECT_EQ(pb.n_t, 0);
    EXPECT_EQ(pb.n_t_tilde, 1);
}

TEST(PhotonBook, FromPhotonsRoundTrips) {
    for (double nc : {0.25, 1.0, 3.0}) {
        for (double nt : {0.0, 0.5, 2.0}) {
            PhotonBook pb = photon_book(NoisyEnsemble::from_photons(nc, nt, 1));
            EXPECT_NEAR(pb.n_c, nc, 1e-12 * nc);
            EXPECT_NEAR(pb.n_t, nt, 1e-12);
        }
    }
}

TEST(Classify, AmplifyAboveThreshold) {
    Regime r = classify(NoisyEnsemble::from_photons(1, 1, 3));
    EXPECT_EQ(r.tag, RegimeTag::DetAmplify);
    EXPECT_EQ(r.prob_tag, RegimeTag::ProbPlateau);
    EXPECT_DOUBLE_EQ(r.det_threshold, 3);
    EXPECT_NEAR(r.prob_threshold, std::sqrt(6.0), 1e-14);
    EXPECT_TRUE(r.above_prob_threshold);
}

TEST(Classify, MidWindowPointSitsAboveProbThreshold) {
    // 1.5 < 1.75, and sqrt(3.5 * 2.5) / 2 = 1.4790 so 1.5 is above it.
    Regime r = classify(NoisyEnsemble::from_photons(2, 0.5, 1.5));
    EXPECT_EQ(r.tag, RegimeTag::DetIdentity);
    EXPECT_EQ(r.prob_tag, RegimeTag::ProbAmplify);
    EXPECT_DOUBLE_EQ(r.det_threshold, 1.75);
    EXPECT_NEAR(r.prob_threshold, std::sqrt(3.5 * 2.5) / 2, 1e-14);
    EXPECT_TRUE(r.above_prob_threshold);
}

TEST(Classify, LowGainPurifies) {
    for (double nc : {0.1, 1.0, 5.0}) {
        for (double nt : {0.0, 0.3, 4.0}) {
            Regime r = classify(NoisyEnsemble::from_photons(nc, nt, 0.5));
            EXPECT_EQ(r.tag, RegimeTag::Purify);
            EXPECT_FALSE(r.above_prob_threshold);
        }
    }
}

TEST(Classify, BoundariesGoToClosedSide) {
    EXPECT_EQ(classify(NoisyEnsemble::from_photons(1, 1, 1)).tag, RegimeTag::Purify);
    EXPECT_EQ(classify(NoisyEnsemble::from_photons(1, 1, 3)).tag, RegimeTag::DetAmplify);
    EXPECT_EQ(classify(NoisyEnsemble::from_photons(1, 1, std::nextafter(3.0, 0.0))).tag,
              RegimeTag::DetIdentity);
    EXPECT_EQ(classify(NoisyEnsemble::from_photons(1, 1, std::nextafter(1.0, 2.0))).tag,
              RegimeTag::DetIdentity);
}

TEST(ThresholdProperty, DetAboveProbAboveOne) {
    for (double nc : {0.01, 0.25, 1.0, 2.0, 10.0, 100.0}) {
        for (double nt : {0.0, 0.1, 1.0, 5.0}) {
            PhotonBook pb{nc, nt, nt + 1};
            EXPECT_GT(det_threshold(pb), prob_threshold(pb));
            EXPECT_GE(prob_threshold(pb), 1);
        }
    }
}

TEST(ClassifyProperty, PartitionHasNoGaps) {
    // Walking g' upward the tag only ever moves Purify -> DetIdentity -> DetAmplify.
    for (double nc : {0.5, 2.0}) {
        for (double nt : {0.0, 0.5}) {
            int last = 0;
            for (int i = 0; i <= 400; i++) {
                RegimeTag t = classify(NoisyEnsemble::from_photons(nc, nt, i * 0.01)).tag;
                int rank = t == RegimeTag::Purify ? 0 : t == RegimeTag::DetIdentity ? 1 : 2;
                EXPECT_GE(rank, last);
                last = rank;
            }
            EXPECT_EQ(last, 2);
        }
    }
}

TEST(RegimeName, AllTagsNamed) {
    EXPECT_STREQ(regime_name(RegimeTag::DetAmplify), "DetAmplify");
    EXPECT_STREQ(regime_name(RegimeTag::ProbPlateau), "ProbPlateau");
    EXPECT_STREQ(regime_name(RegimeTag::Purify), "Purify");
}

}  // namespace
}  // namespace noisyamp
