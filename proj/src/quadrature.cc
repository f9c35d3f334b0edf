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

#include "noisyamp/quadrature.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "noisyamp/errors.h"

namespace noisyamp {

namespace {

LaguerreRule build_rule(int n) {
    // Jacobi matrix of the Laguerre polynomials: diag 2k+1, off-diag k.
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int k = 0; k < n; k++) {
        diag[k] = 2 * k + 1;
        if (k + 1 < n) {
            off[k] = k + 1;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("Gauss-Laguerre eigen solve failed");
    }
    LaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; k++) {
        double v = solver.eigenvectors()(0, k);
        rule.nodes[k] = solver.eigenvalues()[k];
        rule.weights[k] = v * v;
    }
    // Small tail weights carry large relative error from the eigensolver;
    // recompute them as t / ((n+1) L_{n+1}(t))^2 via the recurrence.
    for (int k = 0; k < n && n > 1; k++) {
        double t = rule.nodes[k];
        double prev = 1, cur = 1 - t;
        for (int j = 1; j <= n; j++) {
            double next = ((2 * j + 1 - t) * cur - j * prev) / (j + 1);
            prev = cur;
            cur = next;
        }
        double w = t / ((n + 1.0) * (n + 1.0) * cur * cur);
        if (std::isfinite(w) && w > 0) {
            rule.weights[k] = w;
        }
    }
    double total = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
    for (double &w : rule.weights) {
        w /= total;
    }
    return rule;
}

}  // namespace

const LaguerreRule &gauss_laguerre(int n) {
    if (n < 1) {
        throw InvalidArgument("Gauss-Laguerre rule needs at least one node");
    }
    static std::mutex mu;
    static std::map<int, LaguerreRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_rule(n)).first;
    }
    return it->second;
}

}  // namespace noisyamp
