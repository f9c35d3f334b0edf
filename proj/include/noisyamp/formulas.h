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

#ifndef NOISYAMP_FORMULAS_H
#define NOISYAMP_FORMULAS_H

#include <optional>

#include "noisyamp/params.h"

namespace noisyamp {

/// Optimal deterministic fidelity for g' >= 1.
double det_fidelity(const NoisyEnsemble &ens);
/// Optimal heralded (probabilistic) fidelity for g' >= 1.
double prob_fidelity(const NoisyEnsemble &ens);
/// Optimal fidelity for g' <= 1, deterministic and probabilistic alike.
double puri_fidelity(const NoisyEnsemble &ens);
/// Best measure-and-prepare fidelity.
double cft(const NoisyEnsemble &ens);
/// Average fidelity of heterodyne then re-preparation of |z beta>.
double mp_fidelity(const NoisyEnsemble &ens, double z);

/// Both closed-form pieces, evaluated regardless of which one applies.
struct Branches {
    /// Above the threshold: the shared amplifier expression.
    double first;
    /// Below the threshold.
    double second;
};
Branches det_branches(const NoisyEnsemble &ens);
Branches prob_branches(const NoisyEnsemble &ens);

/// det_fidelity or puri_fidelity, whichever applies.
double quantum_det_optimum(const NoisyEnsemble &ens);
/// prob_fidelity or puri_fidelity, whichever applies.
double quantum_prob_optimum(const NoisyEnsemble &ens);

struct FidelityReport {
    double det;
    double prob;
    double cft;
    Regime regime;
};

FidelityReport evaluate(const NoisyEnsemble &ens);

struct TuningReport {
    /// Amplifier setting; empty for g' < 1.
    std::optional<double> cosh_r;
    /// Filter gain; empty for g' < 1.
    std::optional<double> y;
    /// Attenuator setting; empty for g' > 1.
    std::optional<double> cos_theta;
    double z;
    /// False on the plateau above the deterministic threshold, where y = 1.
    bool filter_advantage = false;
    /// The filter gain is below one, so it attenuates.
    bool y_below_one = false;
};

TuningReport tune(const NoisyEnsemble &ens);

struct DetPhotons {
    double n_single_in;
    double n_total_in;
    double n_single_out;
    double n_total_out;
    /// No squeezing is applied below the deterministic threshold.
    bool identity_channel;
};

struct ProbPhotons {
    double n_single_in;
    double n_total_in;
    /// Thermal photons of the reduced single mode after the filter.
    double n_t_out;
    double n_total_out;
    double n_single_out;
};

DetPhotons photon_output_det(const MultimodeTask &task);
ProbPhotons photon_output_prob(const MultimodeTask &task, double y);

}  // namespace noisyamp

#endif
