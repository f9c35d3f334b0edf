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

#ifndef NOISYAMP_EXPM_H
#define NOISYAMP_EXPM_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace noisyamp {

/// Tridiagonal generator G with G(k+1,k) = lower[k], G(k,k+1) = upper[k].
/// Zero diagonal; every generator used here is off-diagonal.
template <typename Scalar>
struct Tridiagonal {
    std::vector<Scalar> lower;
    std::vector<Scalar> upper;

    int size() const { return static_cast<int>(lower.size()) + 1; }
    /// Largest absolute column sum.
    double norm1() const;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense() const;
};

/// Replaces every column of v with exp(G) v. Scaled Taylor steps; each
/// step's series is summed until its terms stop contributing.
/// active_norm, when positive, bounds |G| on the levels the columns occupy
/// and sets the step count; otherwise the full matrix norm is used.
template <typename Scalar>
void expm_apply(const Tridiagonal<Scalar> &g,
                Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &v,
                double active_norm = 0);

extern template struct Tridiagonal<double>;
extern template struct Tridiagonal<std::complex<double>>;

}  // namespace noisyamp

#endif
