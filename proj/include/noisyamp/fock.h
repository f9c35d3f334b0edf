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

#ifndef NOISYAMP_FOCK_H
#define NOISYAMP_FOCK_H

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "noisyamp/params.h"
#include "noisyamp/quadrature.h"

namespace noisyamp {

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Populations this small in the top levels of a truncated space are
/// treated as zero.
constexpr double kTopBandTol = 1e-12;

/// Density matrix on Fock levels 0..dim-1.
struct FockDensity {
    CMat mat;

    int dim() const { return static_cast<int>(mat.rows()); }
    double trace() const { return mat.trace().real(); }
    /// Population of the top max(4, dim/8) levels.
    double top_band() const;
    /// Hermiticity, trace and positivity checks. Throws InvalidArgument.
    void validate(double trace_max = 1 + 1e-9) const;
};

struct FilterSpec {
    int k_cut = 0;
    double y = 1;
};

/// Truncated coherent ket. TruncationError when the norm deficit exceeds 1e-10.
CVec coherent_ket(cd amp, int dim);
/// Same series with no norm check.
CVec coherent_ket_unchecked(cd amp, int dim);

/// A cutoff that comfortably contains a displaced thermal state.
int safe_cutoff(double amp2, double nbar);

FockDensity thermal_density(double nbar, int dim);
/// D(amp) rho_th(nbar) D(amp)^dagger with D from the truncated generator.
FockDensity displaced_thermal_density(cd amp, double nbar, int dim);

/// exp(r (a^dag b^dag - a b)) on rho (x) |0><0|, ancilla traced out.
/// dim_anc <= 0 uses rho.dim(). The output keeps the input cutoff.
FockDensity apply_two_mode_squeezer(const FockDensity &rho, double r, int dim_anc = 0);
/// exp(theta (a^dag b - a b^dag)) on rho (x) |0><0|, env traced out.
FockDensity apply_attenuator(const FockDensity &rho, double theta);
/// Q rho Q with Q = sum_{n<=K} y^{n-m} |n><n|, where m = K for y >= 1 and
/// m = 0 for y < 1 so that Q never increases the trace.
FockDensity apply_filter(const FockDensity &rho, const FilterSpec &f);
/// Measure-and-prepare: heterodyne, then re-prepare |z beta>.
FockDensity apply_heterodyne_mp(const FockDensity &rho, double z, const QuadratureGrid &grid);

/// <amp| rho |amp> with an untruncated-series ket (no norm check).
double coherent_fidelity(const FockDensity &rho, cd amp);

struct FockMoments {
    double trace;
    /// Normalized by the trace.
    double mean_n;
    cd mean_a;
    /// mean_n - |mean_a|^2
    double thermal_n;
};
FockMoments moments(const FockDensity &rho);

/// Thermal occupation of a diagonal geometric state, from the ratio of
/// consecutive populations averaged over levels lo..hi.
double fit_geometric_nbar(const FockDensity &rho, int lo, int hi);

/// A channel for the numerical average. gain2 and added predict the output
/// displaced thermal (amp2 * gain2, nbar * gain2 + added) so the cutoff can
/// be chosen up front.
struct FockChannel {
    std::function<FockDensity(const FockDensity &)> map;
    double gain2 = 1;
    double added = 0;
    int min_dim = 1;
    bool trace_preserving = true;
};

FockChannel identity_channel();
FockChannel squeezer_channel(double r);
FockChannel attenuator_channel(double theta);
FockChannel filter_channel(const FilterSpec &f);
FockChannel heterodyne_channel(double z, const QuadratureGrid &grid = {});

struct NumericOptions {
    int dim = 64;
    int radial_nodes = 80;
    /// 1 uses phase covariance; otherwise a full polar prior grid.
    int angular_nodes = 1;
    double tolerance = 1e-6;
    bool check_convergence = true;
    /// Largest cutoff any single node may use.
    int max_dim = 512;
    /// Largest base cutoff reached by the automatic doubling.
    int max_base_dim = 256;
};

struct NumericFidelity {
    double value;
    double numerator;
    double denominator;
    /// Prior weight of nodes beyond max_dim.
    double skipped_mass;
    /// |value - refined value|, zero when the check is off.
    double shift;
    int dim;
    int radial_nodes;
    int max_dim_used;
};

NumericFidelity avg_fidelity_numeric(const NoisyEnsemble &ens, const FockChannel &ch,
                                     const NumericOptions &opt);
double avg_fidelity_numeric(const NoisyEnsemble &ens, const FockChannel &ch, int dim,
                            int radial_nodes);

}  // namespace noisyamp

#endif
