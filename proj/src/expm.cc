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

#include "noisyamp/expm.h"

#include <algorithm>
#include <cmath>

#include "noisyamp/errors.h"

namespace noisyamp {

template <typename Scalar>
double Tridiagonal<Scalar>::norm1() const {
    int n = size();
    double best = 0;
    for (int k = 0; k < n; k++) {
        double s = 0;
        if (k > 0) {
            s += std::abs(upper[k - 1]);
        }
        if (k + 1 < n) {
            s += std::abs(lower[k]);
        }
        best = std::max(best, s);
    }
    return best;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> Tridiagonal<Scalar>::dense() const {
    int n = size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    for (int k = 0; k + 1 < n; k++) {
        m(k + 1, k) = lower[k];
        m(k, k + 1) = upper[k];
    }
    return m;
}

namespace {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// out = h * G * in
template <typename Scalar>
void tri_mul(const Tridiagonal<Scalar> &g, double h, const Mat<Scalar> &in, Mat<Scalar> &out) {
    int n = g.size();
    out.resize(in.rows(), in.cols());
    for (int k = 0; k < n; k++) {
        if (k == 0) {
            out.row(0) = (h * g.upper[0]) * in.row(1);
        } else if (k + 1 == n) {
            out.row(k) = (h * g.lower[k - 1]) * in.row(k - 1);
        } else {
            out.row(k) = (h * g.lower[k - 1]) * in.row(k - 1) + (h * g.upper[k]) * in.row(k + 1);
        }
    }
}

}  // namespace

template <typename Scalar>
void expm_apply(const Tridiagonal<Scalar> &g, Mat<Scalar> &v, double active_norm) {
    int n = g.size();
    if (v.rows() != n) {
        throw InvalidArgument("expm_apply: dimension mismatch");
    }
    if (n == 1) {
        return;
    }
    double nu = active_norm > 0 ? std::min(active_norm, g.norm1()) : g.norm1();
    // Step norm of about 4: terms peak near 4^4/4! and have decayed
    // past 1e-17 after roughly 40 orders.
    int steps = std::max(1, static_cast<int>(std::ceil(nu / 4)));
    for (int attempt = 0; attempt < 6; attempt++) {
        double h = 1.0 / steps;
        Mat<Scalar> cur = v;
        bool ok = true;
        Mat<Scalar> term, next;
        for (int s = 0; s < steps && ok; s++) {
            Mat<Scalar> acc = cur;
            term = cur;
            double base = cur.norm();
            int small = 0;
            int k = 1;
            double peak = 0;
            for (; k <= 120; k++) {
                tri_mul(g, h / k, term, next);
                term.swap(next);
                acc += term;
                double tn = term.norm();
                peak = std::max(peak, tn);
                if (tn <= 1e-17 * base) {
                    if (++small == 2) {
                        break;
                    }
                } else {
                    small = 0;
                }
            }
            // Large intermediate terms mean the step was too long for the
            // active norm guess; cancellation would eat the digits.
            if (k > 120 || peak > 1e3 * base || !acc.allFinite()) {
                ok = false;
            }
            cur.swap(acc);
        }
        if (ok) {
            v.swap(cur);
            return;
        }
        steps *= 4;
    }
    throw ConvergenceError("expm_apply: Taylor series failed to converge");
}

template struct Tridiagonal<double>;
template struct Tridiagonal<std::complex<double>>;
template void expm_apply(const Tridiagonal<double> &, Mat<double> &, double);
template void expm_apply(const Tridiagonal<std::complex<double>> &, Mat<std::complex<double>> &,
                         double);

}  // namespace noisyamp
