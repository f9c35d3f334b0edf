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

#ifndef NOISYAMP_QUADRATURE_H
#define NOISYAMP_QUADRATURE_H

#include <vector>

namespace noisyamp {

/// Nodes and weights for integrals of f(t) e^{-t} over [0, inf).
/// Weights sum to one.
struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Laguerre rule with n nodes (Golub-Welsch). Cached per n.
const LaguerreRule &gauss_laguerre(int n);

/// Polar phase-space grid: radial Gauss-Laguerre in |beta|^2 / scale and
/// uniform angles.
struct QuadratureGrid {
    int radial_nodes = 64;
    int angular_nodes = 32;
    /// Scale of |beta|^2 in the radial rule; <= 0 picks one from the state.
    double scale = 0;
};

}  // namespace noisyamp

#endif
