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

#ifndef NOISYAMP_BOUNDS_H
#define NOISYAMP_BOUNDS_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "noisyamp/params.h"

namespace noisyamp {

/// Thermal-ansatz quantities for one kappa.
struct BoundWorkspace {
    double kappa;
    double a;
    double b;
    double c;
    double y_plus;
    double y_minus;
    /// a - b - c, evaluated without cancellation.
    double gap;
};

/// Circulant a I - b P - c P^T with P the cyclic shift (P v)_i = v_{i+1}:
/// -b on the wrapped superdiagonal, -c on the wrapped subdiagonal.
struct CirculantTriple {
    double diag;
    double sup;
    double sub;
    int size;
};

/// Largest admissible kappa, lambda' mu / (lambda' + mu).
double kappa_limit(const NoisyEnsemble &ens);

BoundWorkspace coeffs(const NoisyEnsemble &ens, double kappa);
/// Roots from a bare (a, b, c) triple; gap is a - b - c.
BoundWorkspace roots(double a, double b, double c);

std::vector<std::complex<double>> circulant_eigs(const CirculantTriple &t);
Eigen::MatrixXd circulant_dense(const CirculantTriple &t);

/// lim (det M_p)^{1/p} = b y_plus, valid when y_plus >= 1 >= y_minus.
double det_limit(const BoundWorkspace &w);

/// Blocks of the 2p x 2p Gaussian-integral matrix M_p.
struct BoundBlocks {
    Eigen::MatrixXd a;
    Eigen::MatrixXd b;
    Eigen::MatrixXd c;
};
BoundBlocks bound_blocks(const NoisyEnsemble &ens, double kappa, int p);
/// (det(AC - B^2))^{1/p} from dense blocks, via a log-determinant.
double finite_p_root(const NoisyEnsemble &ens, double kappa, int p);
/// (det M_p)^{1/p} from the full block matrix.
double finite_p_root_block(const NoisyEnsemble &ens, double kappa, int p);

/// Upper bound on the deterministic optimum for 0 < kappa <= kappa_limit.
double det_upper_bound(const NoisyEnsemble &ens, double kappa);
/// d/dkappa of det_upper_bound.
double det_upper_bound_slope(const NoisyEnsemble &ens, double kappa);

/// Closed-form minimizer. Below g' = 1 + N_T/N_C the second form exceeds
/// kappa_limit and is not admissible.
double kappa_star(const NoisyEnsemble &ens);

struct BoundMinimum {
    double kappa;
    double value;
    bool at_limit;
};
/// Golden-section search over (1e-9, kappa_limit], then bisection on the
/// slope to pin the minimizer.
BoundMinimum minimize_bound_numeric(const NoisyEnsemble &ens);

/// The bound at kappa = kappa_limit, the average input state.
double prob_via_kappa_prime(const NoisyEnsemble &ens);

struct AmpConvergence {
    double base1;
    double base2;
    double e1;
    double e2;
    /// 2 sqrt(e1 e2), the bound on the fidelity deficit at rank K.
    double deficit_bound;
};
AmpConvergence amp_convergence_terms(const NoisyEnsemble &ens, double y, int k_cut);

struct CftBoundTerms {
    double c1;
    double c2;
    double x_prime;
};
CftBoundTerms cft_terms(const NoisyEnsemble &ens);
/// Norm of the partial-transposed operator from its top eigenvector |00>.
double cft_norm_closed(const NoisyEnsemble &ens);
double cft_bound(const NoisyEnsemble &ens);

struct CftNumericNorm {
    double top_eigenvalue;
    /// Photon-number block holding the largest eigenvalue. The top is flat
    /// across blocks, so the winner is decided by rounding.
    int top_block;
};
/// Top eigenvalue of the operator truncated to levels < dim in both modes.
CftNumericNorm cft_norm_numeric(const NoisyEnsemble &ens, int dim, int radial_nodes);

}  // namespace noisyamp

#endif
