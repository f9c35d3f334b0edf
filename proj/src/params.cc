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

#include "noisyamp/params.h"

#include <cmath>
#include <string>

#include "noisyamp/errors.h"

namespace noisyamp {

namespace {

bool finite_positive(double x) {
    return std::isfinite(x) && x > 0;
}

}  // namespace

void MultimodeTask::validate() const {
    if (!finite_positive(lambda)) {
        throw InvalidArgument("lambda must be a positive finite number");
    }
    if (!(mu > 0) || std::isnan(mu)) {
        throw InvalidArgument("mu must be positive");
    }
    if (!std::isfinite(g) || g < 0) {
        throw InvalidArgument("g must be a finite number >= 0");
    }
    if (n_in < 1 || m_out < 1) {
        throw InvalidArgument("copy counts n and m must be >= 1");
    }
}

void NoisyEnsemble::validate() const {
    if (!finite_positive(lambda_prime)) {
        throw InvalidArgument("lambda' must be a positive finite number");
    }
    if (!(mu > 0) || std::isnan(mu)) {
        throw InvalidArgument("mu must be positive");
    }
    if (!std::isfinite(g_prime) || g_prime < 0) {
        throw InvalidArgument("g' must be a finite number >= 0");
    }
}

NoisyEnsemble NoisyEnsemble::from_photons(double n_c, double n_t, double g_prime) {
    if (!finite_positive(n_c) || !(n_t >= 0)) {
        throw InvalidArgument("photon numbers must satisfy n_c > 0, n_t >= 0");
    }
    NoisyEnsemble e{1 / n_c, n_t > 0 ? 1 / n_t : 1e15, g_prime};
    e.validate();
    return e;
}

const char *regime_name(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::DetAmplify:
            return "DetAmplify";
        case RegimeTag::DetIdentity:
            return "DetIdentity";
        case RegimeTag::ProbAmplify:
            return "ProbAmplify";
        case RegimeTag::ProbPlateau:
            return "ProbPlateau";
        case RegimeTag::Purify:
            return "Purify";
    }
    return "?";
}

NoisyEnsemble reduce(const MultimodeTask &task) {
    task.validate();
    return NoisyEnsemble{
        task.lambda / task.n_in,
        task.mu,
        task.g * std::sqrt(static_cast<double>(task.m_out) / task.n_in)};
}

PhotonBook photon_book(const NoisyEnsemble &ens) {
    ens.validate();
    double n_t = ens.mu >= kPureMu ? 0.0 : 1 / ens.mu;
    return PhotonBook{1 / ens.lambda_prime, n_t, n_t + 1};
}

double det_threshold(const PhotonBook &pb) {
    return (pb.n_c + pb.n_t + 1) / pb.n_c;
}

double prob_threshold(const PhotonBook &pb) {
    return std::sqrt((pb.n_c + pb.n_t + 1) * (pb.n_c + pb.n_t)) / pb.n_c;
}

Regime classify(const NoisyEnsemble &ens) {
    PhotonBook pb = photon_book(ens);
    Regime r;
    r.det_threshold = det_threshold(pb);
    r.prob_threshold = prob_threshold(pb);
    double g = ens.g_prime;
    r.above_prob_threshold = g >= r.prob_threshold;
    if (g <= 1) {
        r.tag = RegimeTag::Purify;
        r.prob_tag = RegimeTag::Purify;
    } else if (g < r.det_threshold) {
        r.tag = RegimeTag::DetIdentity;
        r.prob_tag = RegimeTag::ProbAmplify;
    } else {
        r.tag = RegimeTag::DetAmplify;
        r.prob_tag = RegimeTag::ProbPlateau;
    }
    return r;
}

}  // namespace noisyamp
