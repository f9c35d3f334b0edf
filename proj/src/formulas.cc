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

#include "noisyamp/formulas.h"

#include <algorithm>
#include <cmath>

#include "noisyamp/errors.h"

namespace noisyamp {

namespace {

void require_amplifying(const NoisyEnsemble &ens, const char *what) {
    if (ens.g_prime < 1) {
        throw DomainError(std::string(what) + " requires g' >= 1; use puri_fidelity");
    }
}

// Shared first branch of the deterministic and probabilistic optima.
double amplifier_branch(const PhotonBook &pb, double g) {
    return (pb.n_c + pb.n_t + 1) / (g * g * pb.n_c * (pb.n_t + 1));
}

double filter_branch(const PhotonBook &pb, double g) {
    double s = pb.n_c + pb.n_t;
    return s / (s + g * g * pb.n_c * pb.n_t);
}

}  // namespace

double det_fidelity(const NoisyEnsemble &ens) {
    require_amplifying(ens, "det_fidelity");
    PhotonBook pb = photon_book(ens);
    Branches b = det_branches(ens);
    return ens.g_prime >= det_threshold(pb) ? b.first : b.second;
}

double prob_fidelity(const NoisyEnsemble &ens) {
    require_amplifying(ens, "prob_fidelity");
    PhotonBook pb = photon_book(ens);
    Branches b = prob_branches(ens);
    return ens.g_prime >= prob_threshold(pb) ? b.first : b.second;
}

double puri_fidelity(const NoisyEnsemble &ens) {
    if (ens.g_prime > 1) {
        throw DomainError("puri_fidelity requires g' <= 1");
    }
    return filter_branch(photon_book(ens), ens.g_prime);
}

double cft(const NoisyEnsemble &ens) {
    // In lambda', mu form: (l + m + l m) / (l + m + l m + g'^2 (m + 1)),
    // i.e. (N_C + N_T + 1) / (N_C + N_T + 1 + N_C (N_T + 1) g'^2).
    PhotonBook pb = photon_book(ens);
    double s = pb.n_c + pb.n_t_tilde;
    return s / (s + pb.n_c * pb.n_t_tilde * ens.g_prime * ens.g_prime);
}

double mp_fidelity(const NoisyEnsemble &ens, double z) {
    // Heterodyne output for input (alpha, N_T) is (z alpha, z^2 (N_T + 1)).
    PhotonBook pb = photon_book(ens);
    double miss = ens.g_prime - z;
    return 1 / (1 + z * z * pb.n_t_tilde + miss * miss * pb.n_c);
}

Branches det_branches(const NoisyEnsemble &ens) {
    PhotonBook pb = photon_book(ens);
    double g = ens.g_prime;
    return {amplifier_branch(pb, g), 1 / ((g - 1) * (g - 1) * pb.n_c + pb.n_t + 1)};
}

Branches prob_branches(const NoisyEnsemble &ens) {
    PhotonBook pb = photon_book(ens);
    return {amplifier_branch(pb, ens.g_prime), filter_branch(pb, ens.g_prime)};
}

double quantum_det_optimum(const NoisyEnsemble &ens) {
    return ens.g_prime <= 1 ? puri_fidelity(ens) : det_fidelity(ens);
}

double quantum_prob_optimum(const NoisyEnsemble &ens) {
    return ens.g_prime <= 1 ? puri_fidelity(ens) : prob_fidelity(ens);
}

FidelityReport evaluate(const NoisyEnsemble &ens) {
    return FidelityReport{quantum_det_optimum(ens), quantum_prob_optimum(ens), cft(ens),
                          classify(ens)};
}

TuningReport tune(const NoisyEnsemble &ens) {
    PhotonBook pb = photon_book(ens);
    double g = ens.g_prime;
    TuningReport t;
    t.z = g * pb.n_c / (pb.n_c + pb.n_t + 1);
    if (g <= 1) {
        t.cos_theta = std::min(1.0, g / (1 + pb.n_t / pb.n_c));
    }
    if (g >= 1) {
        t.cosh_r = std::max(1.0, g * pb.n_c / (1 + pb.n_c + pb.n_t));
        double pth = prob_threshold(pb);
        double dth = det_threshold(pb);
        if (g <= pth) {
            t.y = g * pb.n_c / (pb.n_c + pb.n_t);
            t.filter_advantage = true;
        } else if (g <= dth) {
            t.y = (pb.n_c + pb.n_t + 1) / (g * pb.n_c);
            t.filter_advantage = g < dth;
        } else {
            t.y = 1.0;
        }
        t.y_below_one = *t.y < 1;
    }
    return t;
}

DetPhotons photon_output_det(const MultimodeTask &task) {
    NoisyEnsemble ens = reduce(task);
    if (ens.g_prime < 1) {
        throw DomainError("deterministic photon bookkeeping requires g sqrt(M/N) >= 1");
    }
    PhotonBook pb = photon_book(ens);
    double c = std::max(1.0, ens.g_prime * pb.n_c / (1 + pb.n_c + pb.n_t));
    DetPhotons d;
    d.n_single_in = pb.n_t;
    d.n_total_in = task.n_in * pb.n_t;
    // The reduced mode carries all thermal photons of the N inputs; the
    // amplified mode is spread evenly over the M outputs.
    d.n_total_out = c * c * (pb.n_t + 1) - 1;
    d.n_single_out = d.n_total_out / task.m_out;
    d.identity_channel = c == 1.0;
    return d;
}

ProbPhotons photon_output_prob(const MultimodeTask &task, double y) {
    NoisyEnsemble ens = reduce(task);
    if (!(y > 0)) {
        throw DomainError("filter gain y must be positive");
    }
    PhotonBook pb = photon_book(ens);
    ProbPhotons p;
    p.n_single_in = pb.n_t;
    p.n_total_in = task.n_in * pb.n_t;
    if (pb.n_t == 0) {
        p.n_t_out = 0;
    } else {
        double mu = ens.mu;
        if (y * y >= 1 + mu) {
            throw DomainError("filter gain at or beyond the pole y^2 = 1 + mu");
        }
        p.n_t_out = pb.n_t * y * y * mu / (1 + mu - y * y);
    }
    p.n_total_out = p.n_t_out;
    p.n_single_out = p.n_total_out / task.m_out;
    return p;
}

}  // namespace noisyamp
