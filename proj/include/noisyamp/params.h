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

#ifndef NOISYAMP_PARAMS_H
#define NOISYAMP_PARAMS_H

#include <string>
#include <utility>

namespace noisyamp {

/// Values of mu at or above this are treated as noiseless (pure) inputs.
constexpr double kPureMu = 1e12;

/// N identical noisy copies in, M copies of the amplified state out.
struct MultimodeTask {
    double lambda = 1;
    double mu = 1;
    double g = 1;
    int n_in = 1;
    int m_out = 1;

    /// Throws InvalidArgument when a field violates its range.
    void validate() const;
};

/// Single-mode problem after the multimode reduction.
struct NoisyEnsemble {
    double lambda_prime = 1;
    double mu = 1;
    double g_prime = 1;

    void validate() const;
    /// Builds an ensemble from photon numbers. n_t = 0 maps to the pure sentinel.
    static NoisyEnsemble from_photons(double n_c, double n_t, double g_prime);
};

struct PhotonBook {
    double n_c;
    double n_t;
    double n_t_tilde;
};

enum class RegimeTag { DetAmplify, DetIdentity, ProbAmplify, ProbPlateau, Purify };

const char *regime_name(RegimeTag tag);

struct Regime {
    /// Deterministic classification: Purify, DetIdentity or DetAmplify.
    RegimeTag tag;
    /// Probabilistic classification: Purify, ProbAmplify or ProbPlateau.
    RegimeTag prob_tag;
    bool above_prob_threshold;
    double det_threshold;
    double prob_threshold;
};

NoisyEnsemble reduce(const MultimodeTask &task);
PhotonBook photon_book(const NoisyEnsemble &ens);

double det_threshold(const PhotonBook &pb);
double prob_threshold(const PhotonBook &pb);

Regime classify(const NoisyEnsemble &ens);

}  // namespace noisyamp

#endif
