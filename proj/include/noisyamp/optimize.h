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

#ifndef NOISYAMP_OPTIMIZE_H
#define NOISYAMP_OPTIMIZE_H

#include <cmath>

namespace noisyamp {

struct ScalarOptimum {
    double x;
    double value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
/// Stops once the bracket is narrower than tol.
template <typename F>
ScalarOptimum golden_max(F &&f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    ScalarOptimum best{lo, f(lo)};
    for (double x : {x1, x2, hi}) {
        double v = f(x);
        if (v > best.value) {
            best = {x, v};
        }
    }
    return best;
}

template <typename F>
ScalarOptimum golden_min(F &&f, double lo, double hi, double tol) {
    ScalarOptimum r = golden_max([&](double x) { return -f(x); }, lo, hi, tol);
    return {r.x, -r.value};
}

}  // namespace noisyamp

#endif
