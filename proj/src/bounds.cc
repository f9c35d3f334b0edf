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

#include "noisyamp/bounds.h"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "noisyamp/errors.h"
#include "noisyamp/fock.h"
#include "noisyamp/optimize.h"
#include "noisyamp/quadrature.h"

namespace noisyamp {

namespace {

// Tolerance for root conditions and for kappa sitting on the admissible limit.
constexpr double kEdge = 1e-12;

void require_amplifying(const NoisyEnsemble &ens, const char *what) {
    if (ens.g_prime < 1) {
        throw DomainError(std::string(what) + " requires g' >= 1");
    }
}

// P with (P v)_i = v_{i+1 mod p}.
Eigen::MatrixXd cyclic_shift(int p) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i < p; i++) {
        s(i, (i + 1) % p) += 1;
    }
    return s;
}

double log_abs_det(const Eigen::MatrixXd &m) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    const Eigen::MatrixXd &f = lu.matrixLU();
    double s = 0;
    for (int i = 0; i < f.rows(); i++) {
        s += std::log(std::abs(f(i, i)));
    }
    return s;
}

}  // namespace

double kappa_limit(const NoisyEnsemble &ens) {
    ens.validate();
    return ens.lambda_prime * ens.mu / (ens.lambda_prime + ens.mu);
}

BoundWorkspace roots(double a, double b, double c) {
    BoundWorkspace w{0, a, b, c, 0, 0, a - b - c};
    if (!(b > 0)) {
        throw RootError("circulant roots need b > 0");
    }
    double disc = a * a - 4 * b * c;
    if (disc < 0) {
        throw RootError("negative discriminant a^2 - 4bc");
    }
    double s = std::sqrt(disc);
    w.y_plus = (a + s) / (2 * b);
    // Product of the roots is c/b; this form avoids cancellation.
    w.y_minus = a + s > 0 ? 2 * c / (a + s) : (a - s) / (2 * b);
    return w;
}

BoundWorkspace coeffs(const NoisyEnsemble &ens, double kappa) {
    ens.validate();
    if (!(kappa > 0)) {
        throw ValidityError("kappa must be positive");
    }
    double l = ens.lambda_prime, mu = ens.mu, g2 = ens.g_prime * ens.g_prime;
    BoundWorkspace w;
    w.kappa = kappa;
    w.a = mu + l + mu * l + g2 * (mu + kappa + 2);
    w.b = g2 * (mu + 1);
    w.c = (g2 + mu + l) * (kappa + 1);
    w.gap = l * mu - kappa * (l + mu);
    if (!(w.b > 0)) {
        throw RootError("circulant roots need g' > 0");
    }
    // a^2 - 4bc = (a-b-c)(a+b+c) + (b-c)^2 keeps digits near the limit.
    double disc = w.gap * (w.a + w.b + w.c) + (w.b - w.c) * (w.b - w.c);
    if (disc < 0) {
        throw RootError("negative discriminant a^2 - 4bc");
    }
    double s = std::sqrt(disc);
    w.y_plus = (w.a + s) / (2 * w.b);
    w.y_minus = 2 * w.c / (w.a + s);
    return w;
}

std::vector<std::complex<double>> circulant_eigs(const CirculantTriple &t) {
    if (t.size < 2) {
        throw InvalidArgument("circulant size must be >= 2");
    }
    std::vector<std::complex<double>> e(t.size);
    for (int n = 0; n < t.size; n++) {
        std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi * n / t.size);
        e[n] = t.diag - t.sup / w - t.sub * w;
    }
    return e;
}

Eigen::MatrixXd circulant_dense(const CirculantTriple &t) {
    if (t.size < 2) {
        throw InvalidArgument("circulant size must be >= 2");
    }
    Eigen::MatrixXd s = cyclic_shift(t.size);
    return t.diag * Eigen::MatrixXd::Identity(t.size, t.size) - t.sup * s - t.sub * s.transpose();
}

double det_limit(const BoundWorkspace &w) {
    if (!(w.y_plus >= 1 - kEdge && w.y_minus <= 1 + kEdge)) {
        throw ValidityError("det_limit needs y_plus >= 1 >= y_minus");
    }
    return w.b * w.y_plus;
}

BoundBlocks bound_blocks(const NoisyEnsemble &ens, double kappa, int p) {
    if (p < 2) {
        throw InvalidArgument("block size p must be >= 2");
    }
    double l = ens.lambda_prime, mu = ens.mu, g2 = ens.g_prime * ens.g_prime;
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(p, p);
    Eigen::MatrixXd up = cyclic_shift(p);
    Eigen::MatrixXd down = up.transpose();
    BoundBlocks bl;
    bl.a = (l + 1 + g2) * id - g2 * up - (kappa + 1) * down;
    bl.b = id - (kappa + 1) * down;
    bl.c = (mu + 1) * id - (kappa + 1) * down;
    return bl;
}

double finite_p_root(const NoisyEnsemble &ens, double kappa, int p) {
    BoundBlocks bl = bound_blocks(ens, kappa, p);
    Eigen::MatrixXd m = bl.a * bl.c - bl.b * bl.b;
    return std::exp(log_abs_det(m) / p);
}

double finite_p_root_block(const NoisyEnsemble &ens, double kappa, int p) {
    BoundBlocks bl = bound_blocks(ens, kappa, p);
    Eigen::MatrixXd m(2 * p, 2 * p);
    m << bl.a, bl.b, bl.b, bl.c;
    return std::exp(log_abs_det(m) / p);
}

double det_upper_bound(const NoisyEnsemble &ens, double kappa) {
    double lim = kappa_limit(ens);
    if (!(kappa > 0) || kappa > lim * (1 + kEdge)) {
        throw ValidityError("kappa outside (0, lambda' mu / (lambda' + mu)]");
    }
    BoundWorkspace w = coeffs(ens, std::min(kappa, lim));
    double pre = ens.mu * ens.lambda_prime * (w.kappa + 1) / w.kappa;
    return pre / det_limit(w);
}

double det_upper_bound_slope(const NoisyEnsemble &ens, double kappa) {
    BoundWorkspace w = coeffs(ens, kappa);
    double l = ens.lambda_prime, mu = ens.mu, g2 = ens.g_prime * ens.g_prime;
    double k = mu * l * (kappa + 1) / kappa;
    double dk = -mu * l / (kappa * kappa);
    double s = std::sqrt(std::max(0.0, w.gap * (w.a + w.b + w.c) + (w.b - w.c) * (w.b - w.c)));
    double d = w.a + s;
    double da = g2;
    double dc = g2 + mu + l;
    double ds = s > 0 ? (w.a * da - 2 * w.b * dc) / s : 0;
    return 2 * (dk * d - k * (da + ds)) / (d * d);
}

double kappa_star(const NoisyEnsemble &ens) {
    require_amplifying(ens, "kappa_star");
    double l = ens.lambda_prime, mu = ens.mu, g = ens.g_prime;
    if (g >= (l + mu + l * mu) / mu) {
        return kappa_limit(ens);
    }
    return (mu * (g - 1) * (g - 1) + l * (mu + 1)) / (g * (g + mu));
}

BoundMinimum minimize_bound_numeric(const NoisyEnsemble &ens) {
    double lim = kappa_limit(ens);
    double lo = 1e-9;
    auto f = [&](double k) { return det_upper_bound(ens, k); };
    ScalarOptimum g = golden_min(f, lo, lim, 1e-12 * lim);
    // The bound is flat at its minimum, so golden section alone leaves the
    // argmin uncertain at the 1e-8 level; refine on the slope.
    auto slope = [&](double k) { return det_upper_bound_slope(ens, k); };
    if (slope(lim) <= 0) {
        return {lim, f(lim), true};
    }
    double a = std::max(lo, g.x - 1e-3 * lim);
    double b = std::min(lim, g.x + 1e-3 * lim);
    while (a > lo && slope(a) > 0) {
        a = std::max(lo, a - (b - a));
    }
    while (b < lim && slope(b) < 0) {
        b = std::min(lim, b + (b - a));
    }
    for (int it = 0; it < 200 && b - a > 1e-15 * lim; it++) {
        double m = (a + b) / 2;
        if (slope(m) > 0) {
            b = m;
        } else {
            a = m;
        }
    }
    double k = (a + b) / 2;
    return {k, f(k), false};
}

double prob_via_kappa_prime(const NoisyEnsemble &ens) {
    require_amplifying(ens, "prob_via_kappa_prime");
    return det_upper_bound(ens, kappa_limit(ens));
}

AmpConvergence amp_convergence_terms(const NoisyEnsemble &ens, double y, int k_cut) {
    ens.validate();
    if (k_cut < 0 || !(y > 0)) {
        throw InvalidArgument("need K >= 0 and y > 0");
    }
    double l = ens.lambda_prime, mu = ens.mu, g2 = ens.g_prime * ens.g_prime;
    double u = 1 - y * y;
    AmpConvergence r;
    r.base1 = g2 / (g2 + l + 1 - y * y - u * u / (mu + 1 - y * y));
    r.base2 = y * y / (1 + l - l * l / (l + mu));
    if (!(r.base1 > 0 && r.base1 < 1) || !(r.base2 > 0 && r.base2 < 1)) {
        throw NonConvergentError("convergence bracket base outside (0, 1)");
    }
    r.e1 = std::pow(r.base1, k_cut + 1);
    r.e2 = std::pow(r.base2, k_cut + 1);
    r.deficit_bound = 2 * std::sqrt(r.e1 * r.e2);
    return r;
}

CftBoundTerms cft_terms(const NoisyEnsemble &ens) {
    ens.validate();
    double l = ens.lambda_prime, mu = ens.mu;
    double big = l * mu + l + mu;
    return CftBoundTerms{big / (mu + 1), std::sqrt(big * (l + mu)) / mu,
                         big / ((l + mu) * (mu + 1))};
}

double cft_norm_closed(const NoisyEnsemble &ens) {
    CftBoundTerms t = cft_terms(ens);
    double g2 = ens.g_prime * ens.g_prime;
    return 1 / (g2 + t.c2 * t.c2 * (1 - t.x_prime));
}

double cft_bound(const NoisyEnsemble &ens) {
    double l = ens.lambda_prime, mu = ens.mu, g2 = ens.g_prime * ens.g_prime;
    double big = l * mu + l + mu;
    return big / (big + g2 * (mu + 1));
}

CftNumericNorm cft_norm_numeric(const NoisyEnsemble &ens, int dim, int radial_nodes) {
    if (dim < 1 || radial_nodes < 1) {
        throw InvalidArgument("need dim >= 1 and nodes >= 1");
    }
    CftBoundTerms t = cft_terms(ens);
    double g = ens.g_prime;
    double one_minus_x = 1 - t.x_prime;
    double nbar = t.x_prime / one_minus_x;
    // The |00> entry decays as exp(-scale |alpha|^2); radial variable
    // u = scale |alpha|^2.
    double scale = g * g + t.c2 * t.c2 * one_minus_x;
    const LaguerreRule &rule = gauss_laguerre(radial_nodes);
    // Blocks of fixed total photon number m + k, basis |m, N - m>.
    std::vector<Eigen::MatrixXd> blocks(dim);
    for (int n = 0; n < dim; n++) {
        blocks[n] = Eigen::MatrixXd::Zero(n + 1, n + 1);
    }
    const int max_dim = 512;
    for (int i = 0; i < radial_nodes; i++) {
        double w = rule.weights[i];
        if (w <= 0) {
            continue;
        }
        double u = rule.nodes[i];
        double rho = std::sqrt(u / scale);
        double beta = t.c2 * rho;
        int need = std::max(dim, safe_cutoff(beta * beta, nbar));
        if (need > max_dim) {
            // Dropped nodes only remove positive terms.
            break;
        }
        int d = dim;
        while (d < need) {
            d *= 2;
        }
        FockDensity disp;
        while (d <= max_dim) {
            try {
                disp = displaced_thermal_density(beta, nbar, d);
                break;
            } catch (const TruncationError &) {
                d *= 2;
            }
        }
        if (d > max_dim) {
            break;
        }
        Eigen::MatrixXd a = disp.mat.topLeftCorner(dim, dim).real() / one_minus_x;
        Eigen::VectorXd psi = coherent_ket_unchecked(g * rho, dim).real();
        double wt = std::exp(std::log(w) + u) / scale;
        for (int n = 0; n < dim; n++) {
            for (int m = 0; m <= n; m++) {
                for (int mp = 0; mp <= n; mp++) {
                    blocks[n](m, mp) += wt * a(m, mp) * psi[n - m] * psi[n - mp];
                }
            }
        }
    }
    CftNumericNorm best{-1, -1};
    for (int n = 0; n < dim; n++) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blocks[n], Eigen::EigenvaluesOnly);
        double top = es.eigenvalues().maxCoeff();
        if (top > best.top_eigenvalue) {
            best = {top, n};
        }
    }
    return best;
}

}  // namespace noisyamp
