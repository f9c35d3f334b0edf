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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <random>

#include "noisyamp/errors.h"
#include "noisyamp/expm.h"
#include "noisyamp/optimize.h"
#include "noisyamp/quadrature.h"

namespace noisyamp {
namespace {

TEST(GaussLaguerre, WeightsSumToOne) {
    for (int n : {1, 2, 16, 80, 160}) {
        const LaguerreRule &r = gauss_laguerre(n);
        ASSERT_EQ(static_cast<int>(r.nodes.size()), n);
        double s = 0;
        for (double w : r.weights) {
            EXPECT_GE(w, 0);
            s += w;
        }
        EXPECT_NEAR(s, 1, 1e-13);
    }
}

TEST(GaussLaguerre, ExactForLowMoments) {
    // Integral of u^k e^-u is k!.
    const LaguerreRule &r = gauss_laguerre(20);
    double fact = 1;
    for (int k = 0; k < 30; k++) {
        if (k > 0) {
            fact *= k;
        }
        double s = 0;
        for (size_t i = 0; i < r.nodes.size(); i++) {
            s += r.weights[i] * std::pow(r.nodes[i], k);
        }
        EXPECT_NEAR(s / fact, 1, 1e-10) << k;
    }
}

TEST(GaussLaguerre, SmoothIntegrand) {
    const LaguerreRule &r = gauss_laguerre(80);
    double s = 0;
    for (size_t i = 0; i < r.nodes.size(); i++) {
        s += r.weights[i] / (1 + 0.5 * r.nodes[i]) / (1 + 0.5 * r.nodes[i]);
    }
    // Integral of e^-u / (1 + u/2)^2 is 2 - 4 e^2 E1(2), and E1(2) = -Ei(-2).
    EXPECT_NEAR(s, 2 + 4 * std::exp(2.0) * std::expint(-2.0), 1e-8);
}

TEST(GaussLaguerre, RejectsEmptyRule) {
    EXPECT_THROW(gauss_laguerre(0), InvalidArgument);
}

template <typename Scalar>
Tridiagonal<Scalar> random_tri(int n, std::mt19937_64 &gen, double scale);

template <>
Tridiagonal<double> random_tri<double>(int n, std::mt19937_64 &gen, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Tridiagonal<double> t;
    for (int k = 0; k + 1 < n; k++) {
        t.lower.push_back(u(gen));
        t.upper.push_back(u(gen));
    }
    return t;
}

template <>
Tridiagonal<std::complex<double>> random_tri<std::complex<double>>(int n, std::mt19937_64 &gen,
                                                                    double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Tridiagonal<std::complex<double>> t;
    for (int k = 0; k + 1 < n; k++) {
        t.lower.emplace_back(u(gen), u(gen));
        t.upper.emplace_back(u(gen), u(gen));
    }
    return t;
}

template <typename Scalar>
void check_against_dense(int n, double scale, unsigned seed) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    std::mt19937_64 gen(seed);
    Tridiagonal<Scalar> t = random_tri<Scalar>(n, gen, scale);
    Mat v = Mat::Random(n, 3);
    Mat ref = t.dense().exp() * v;
    expm_apply(t, v);
    EXPECT_LT((v - ref).norm(), 1e-12 * std::max(1.0, ref.norm()));
}

TEST(ExpmApply, RealMatchesDenseExponential) {
    check_against_dense<double>(12, 0.5, 1);
    check_against_dense<double>(40, 2.0, 2);
    check_against_dense<double>(64, 6.0, 3);
}

TEST(ExpmApply, ComplexMatchesDenseExponential) {
    check_against_dense<std::complex<double>>(12, 0.5, 4);
    check_against_dense<std::complex<double>>(48, 3.0, 5);
}

TEST(ExpmApply, AntiHermitianGeneratorPreservesNorm) {
    // Displacement-type generator: lower = alpha sqrt(n), upper = -conj.
    Tridiagonal<std::complex<double>> t;
    std::complex<double> alpha(1.2, -0.7);
    int n = 80;
    for (int k = 1; k < n; k++) {
        t.lower.push_back(alpha * std::sqrt(static_cast<double>(k)));
        t.upper.push_back(-std::conj(alpha) * std::sqrt(static_cast<double>(k)));
    }
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, 1);
    v(0, 0) = 1;
    expm_apply(t, v);
    EXPECT_NEAR(v.norm(), 1, 1e-12);
    // Coherent state amplitudes.
    EXPECT_NEAR(std::abs(v(1, 0)), std::abs(alpha) * std::exp(-std::norm(alpha) / 2), 1e-12);
}

TEST(ExpmApply, DimensionMismatch) {
    Tridiagonal<double> t{{1, 2}, {3, 4}};
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2, 1);
    EXPECT_THROW(expm_apply(t, v), InvalidArgument);
}

TEST(GoldenSearch, FindsParabolaVertex) {
    ScalarOptimum m = golden_max([](double x) { return -(x - 0.3) * (x - 0.3) + 2; }, -1, 4, 1e-12);
    EXPECT_NEAR(m.x, 0.3, 1e-6);
    EXPECT_NEAR(m.value, 2, 1e-12);
    ScalarOptimum n = golden_min([](double x) { return std::cosh(x - 1.5); }, 0, 3, 1e-12);
    EXPECT_NEAR(n.x, 1.5, 1e-6);
    EXPECT_NEAR(n.value, 1, 1e-12);
}

}  // namespace
}  // namespace noisyamp
