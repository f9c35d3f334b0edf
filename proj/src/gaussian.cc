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

#include "noisyamp/gaussian.h"

#include <cmath>
#include <numbers>

#include "noisyamp/errors.h"
#include "noisyamp/optimize.h"

namespace noisyamp {

ChannelParam ChannelParam::squeezer_cosh(double cosh_r) {
    if (!(cosh_r >= 1)) {
        throw InvalidArgument("cosh r must be >= 1");
    }
    return {ChannelKind::TwoModeSqueeze, std::acosh(cosh_r)};
}

ChannelParam ChannelParam::attenuator_cos(double cos_theta) {
    if (!(cos_theta >= 0 && cos_theta <= 1)) {
        throw InvalidArgument("cos theta must lie in [0, 1]");
    }
    return {ChannelKind::Attenuate, std::acos(cos_theta)};
}

void ChannelParam::validate() const {
    switch (kind) {
        case ChannelKind::TwoModeSqueeze:
            if (!(value >= 0) || !std::isfinite(value)) {
                throw InvalidArgument("squeezing r must be finite and >= 0");
            }
            break;
        case ChannelKind::Attenuate:
            if (!(value >= 0 && value <= std::numbers::pi / 2)) {
                throw InvalidArgument("attenuator angle must lie in [0, pi/2]");
            }
            break;
        case ChannelKind::Identity:
            break;
    }
}

DisplacedThermal apply_gaussian(const DisplacedThermal &s, const ChannelParam &ch) {
    ch.validate();
    switch (ch.kind) {
        case ChannelKind::TwoModeSqueeze: {
            double c = std::cosh(ch.value);
            double sh = std::sinh(ch.value);
            return {c * s.amp, c * c * s.nbar + sh * sh};
        }
        case ChannelKind::Attenuate: {
            double t = std::cos(ch.value);
            return {t * s.amp, t * t * s.nbar};
        }
        case ChannelKind::Identity:
            break;
    }
    return s;
}

DisplacedThermal apply_noiseless_filter(const DisplacedThermal &s, double y) {
    // y^n acting on a thermal state with ratio q gives ratio q y^2; the
    // displacement rescales by the matching Gaussian weight.
    double q = s.nbar / (s.nbar + 1);
    if (!(q * y * y < 1)) {
        throw DomainError("filter gain beyond the normalizable range");
    }
    double denom = 1 + s.nbar * (1 - y * y);
    return {s.amp * y / denom, s.nbar * y * y / denom};
}

double coherent_overlap(const DisplacedThermal &s, cd target) {
    double d = std::norm(target - s.amp);
    return std::exp(-d / (s.nbar + 1)) / (s.nbar + 1);
}

double avg_fidelity_gaussian(const NoisyEnsemble &ens, const ChannelParam &ch) {
    PhotonBook pb = photon_book(ens);
    // Channels here are phase covariant and linear in the amplitude, so a
    // unit probe gives the amplitude gain and output occupation.
    DisplacedThermal out = apply_gaussian({1.0, pb.n_t}, ch);
    double miss = std::norm(cd(ens.g_prime) - out.amp);
    return 1 / (out.nbar + 1 + miss * pb.n_c);
}

ChannelOptimum maximize_squeezer(const NoisyEnsemble &ens) {
    PhotonBook pb = photon_book(ens);
    double hi = std::max(2.0, 10 * ens.g_prime * pb.n_c);
    auto f = [&](double c) {
        return avg_fidelity_gaussian(ens, ChannelParam::squeezer_cosh(c));
    };
    ScalarOptimum best = golden_max(f, 1.0, hi, 1e-10);
    return {best.x, best.value};
}

ChannelOptimum maximize_attenuator(const NoisyEnsemble &ens) {
    auto f = [&](double t) {
        return avg_fidelity_gaussian(ens, ChannelParam::attenuator_cos(t));
    };
    ScalarOptimum best = golden_max(f, 0.0, 1.0, 1e-10);
    return {best.x, best.value};
}

}  // namespace noisyamp
