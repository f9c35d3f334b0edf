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

#ifndef NOISYAMP_GAUSSIAN_H
#define NOISYAMP_GAUSSIAN_H

#include <complex>

#include "noisyamp/params.h"

namespace noisyamp {

using cd = std::complex<double>;

/// Displacement of a thermal state: amplitude plus thermal occupation.
struct DisplacedThermal {
    cd amp;
    double nbar;
};

enum class ChannelKind { TwoModeSqueeze, Attenuate, Identity };

struct ChannelParam {
    ChannelKind kind = ChannelKind::Identity;
    /// Squeezing r >= 0 or beamsplitter angle theta in [0, pi/2].
    double value = 0;

    static ChannelParam squeezer_cosh(double cosh_r);
    static ChannelParam attenuator_cos(double cos_theta);
    static ChannelParam identity() { return {}; }
    void validate() const;
};

DisplacedThermal apply_gaussian(const DisplacedThermal &state, const ChannelParam &ch);

/// Large-rank limit of the heralded filter y^n on a displaced thermal state.
/// The result is normalized; the success probability is not tracked.
DisplacedThermal apply_noiseless_filter(const DisplacedThermal &state, double y);

/// <beta| rho |beta> for rho the displaced thermal state.
double coherent_overlap(const DisplacedThermal &state, cd target_amp);

/// Prior average of coherent_overlap(channel(rho_alpha), g' alpha).
double avg_fidelity_gaussian(const NoisyEnsemble &ens, const ChannelParam &ch);

struct ChannelOptimum {
    /// cosh r for the squeezer, cos theta for the attenuator.
    double parameter;
    double fidelity;
};

ChannelOptimum maximize_squeezer(const NoisyEnsemble &ens);
ChannelOptimum maximize_attenuator(const NoisyEnsemble &ens);

}  // namespace noisyamp

#endif
