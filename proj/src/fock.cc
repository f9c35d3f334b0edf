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

#include "noisyamp/fock.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>

#include "noisyamp/errors.h"
#include "noisyamp/expm.h"

namespace noisyamp {

namespace {

using RMat = Eigen::MatrixXd;

int top_band_width(int dim) {
    return std::min(dim, std::max(4, dim / 8));
}

// 1 + index of the last diagonal entry above floor * trace.
int diagonal_support(const FockDensity &rho, double floor) {
    double cut = floor * std::max(std::abs(rho.trace()), 1e-300);
    for (int n = rho.dim() - 1; n >= 0; n--) {
        if (rho.mat(n, n).real() > cut) {
            return n + 1;
        }
    }
    return 0;
}

Tridiagonal<cd> displacement_generator(cd amp, int dim) {
    Tridiagonal<cd> g;
    g.lower.resize(dim - 1);
    g.upper.resize(dim - 1);
    for (int n = 0; n + 1 < dim; n++) {
        double s = std::sqrt(n + 1.0);
        g.lower[n] = amp * s;
        g.upper[n] = -std::conj(amp) * s;
    }
    return g;
}

}  // namespace

double FockDensity::top_band() const {
    int d = dim();
    double s = 0;
    for (int n = d - top_band_width(d); n < d; n++) {
        s += mat(n, n).real();
    }
    return s;
}

void FockDensity::validate(double trace_max) const {
    if (mat.rows() != mat.cols() || mat.rows() < 1) {
        throw InvalidArgument("density matrix must be square and non-empty");
    }
    if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    double tr = trace();
    if (!(tr > 0 && tr <= trace_max)) {
        throw InvalidArgument("density matrix trace out of range");
    }
    CMat h = (mat + mat.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw InvalidArgument("density matrix is not positive semidefinite");
    }
}

CVec coherent_ket_unchecked(cd amp, int dim) {
    if (dim < 1) {
        throw InvalidArgument("dim must be >= 1");
    }
    CVec v(dim);
    v[0] = std::exp(-std::norm(amp) / 2);
    for (int n = 1; n < dim; n++) {
        v[n] = v[n - 1] * amp / std::sqrt(static_cast<double>(n));
    }
    return v;
}

CVec coherent_ket(cd amp, int dim) {
    CVec v = coherent_ket_unchecked(amp, dim);
    if (1 - v.squaredNorm() > 1e-10) {
        throw TruncationError("coherent ket needs a larger cutoff");
    }
    return v;
}

int safe_cutoff(double amp2, double nbar) {
    double var = nbar * (nbar + 1) + amp2 * (2 * nbar + 1);
    double est = amp2 + nbar + 8 * std::sqrt(var) + 12;
    if (nbar > 0) {
        // Geometric tail of the thermal part.
        est = std::max(est, amp2 + 30 / std::log1p(1 / nbar));
    }
    return static_cast<int>(std::ceil(est));
}

FockDensity thermal_density(double nbar, int dim) {
    if (dim < 1 || !(nbar >= 0)) {
        throw InvalidArgument("thermal_density: need dim >= 1 and nbar >= 0");
    }
    double q = nbar / (nbar + 1);
    if (std::pow(q, dim) > 1e-10) {
        throw TruncationError("thermal state needs a larger cutoff");
    }
    FockDensity r{CMat::Zero(dim, dim)};
    double p = 1 / (nbar + 1);
    for (int n = 0; n < dim; n++, p *= q) {
        r.mat(n, n) = p;
    }
    return r;
}

FockDensity displaced_thermal_density(cd amp, double nbar, int dim) {
    FockDensity th = thermal_density(nbar, dim);
    double q = nbar / (nbar + 1);
    int cols = 1;
    while (cols < dim && std::pow(q, cols) > 1e-17) {
        cols++;
    }
    Eigen::VectorXd p = th.mat.diagonal().real().head(cols);
    int n_top = std::min(dim, safe_cutoff(std::norm(amp), nbar) + 40);
    double active = 2 * std::abs(amp) * std::sqrt(static_cast<double>(n_top));
    FockDensity r;
    if (amp.imag() == 0) {
        // Real displacements keep every amplitude real.
        RMat x = RMat::Identity(dim, cols);
        if (amp.real() != 0 && dim > 1) {
            Tridiagonal<double> g;
            g.lower.resize(dim - 1);
            g.upper.resize(dim - 1);
            for (int n = 0; n + 1 < dim; n++) {
                g.lower[n] = amp.real() * std::sqrt(n + 1.0);
                g.upper[n] = -g.lower[n];
            }
            expm_apply(g, x, active);
        }
        RMat m = x * p.asDiagonal() * x.transpose();
        r.mat = m.cast<cd>();
    } else {
        CMat x = CMat::Identity(dim, cols);
        if (dim > 1) {
            expm_apply(displacement_generator(amp, dim), x, active);
        }
        r.mat = x * p.asDiagonal() * x.adjoint();
    }
    if (r.top_band() > kTopBandTol) {
        throw TruncationError("displaced thermal state needs a larger cutoff");
    }
    return r;
}

namespace {

// Amplitudes of |n+k>|k> in exp(r (a^dag b^dag - a b)) |n>|0>.
Eigen::VectorXd squeezer_sector(double r, int n, int len) {
    RMat v = RMat::Zero(len, 1);
    v(0, 0) = 1;
    if (len > 1) {
        Tridiagonal<double> g;
        g.lower.resize(len - 1);
        g.upper.resize(len - 1);
        for (int k = 0; k + 1 < len; k++) {
            g.lower[k] = r * std::sqrt((n + k + 1.0) * (k + 1.0));
            g.upper[k] = -g.lower[k];
        }
        double sh2 = std::sinh(r) * std::sinh(r);
        double ch2 = std::cosh(r) * std::cosh(r);
        double mean = (n + 1) * sh2;
        double sd = std::sqrt((n + 1) * sh2 * ch2);
        double k_top = std::min<double>(len, mean + 12 * sd + 40);
        expm_apply(g, v, 2 * r * std::sqrt((n + k_top) * (k_top + 1)));
    }
    return v.col(0);
}

// Amplitudes of |n-k>|k> in exp(theta (a^dag b - a b^dag)) |n>|0>. Sectors
// of fixed total photon number are exact, so no truncation enters here.
Eigen::VectorXd attenuator_sector(double theta, int n) {
    RMat v = RMat::Zero(n + 1, 1);
    v(0, 0) = 1;
    if (n > 0) {
        Tridiagonal<double> g;
        g.lower.resize(n);
        g.upper.resize(n);
        for (int k = 0; k < n; k++) {
            double s = theta * std::sqrt((n - k) * (k + 1.0));
            g.lower[k] = -s;
            g.upper[k] = s;
        }
        expm_apply(g, v);
    }
    return v.col(0);
}

// Per-channel cache of sector amplitudes keyed by (cutoff, ancilla, level).
class SectorCache {
  public:
    template <typename Build>
    const Eigen::VectorXd &get(int dim, int anc, int n, Build &&build) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_tuple(dim, anc, n);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, build()).first;
        }
        return it->second;
    }

  private:
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, Eigen::VectorXd> cache_;
};

FockDensity squeeze_with(const FockDensity &rho, double r, int anc, SectorCache *cache) {
    int dim = rho.dim();
    int support = diagonal_support(rho, 1e-26);
    std::vector<Eigen::VectorXd> local;
    std::vector<const Eigen::VectorXd *> coef(support);
    if (!cache) {
        local.resize(support);
    }
    for (int n = 0; n < support; n++) {
        int len = std::min(dim - n, anc);
        auto build = [&] { return squeezer_sector(r, n, len); };
        if (cache) {
            coef[n] = &cache->get(dim, anc, n, build);
        } else {
            local[n] = build();
            coef[n] = &local[n];
        }
        const Eigen::VectorXd &v = *coef[n];
        double tail = v.tail(top_band_width(len)).squaredNorm();
        if (tail * rho.mat(n, n).real() > kTopBandTol) {
            throw TruncationError("squeezer output needs a larger cutoff");
        }
    }
    FockDensity out{CMat::Zero(dim, dim)};
    for (int n = 0; n < support; n++) {
        const Eigen::VectorXd &cn = *coef[n];
        for (int m = 0; m < support; m++) {
            cd x = rho.mat(n, m);
            if (x == cd(0)) {
                continue;
            }
            const Eigen::VectorXd &cm = *coef[m];
            int kmax = std::min(cn.size(), cm.size());
            for (int k = 0; k < kmax; k++) {
                out.mat(n + k, m + k) += cn[k] * cm[k] * x;
            }
        }
    }
    return out;
}

FockDensity attenuate_with(const FockDensity &rho, double theta, SectorCache *cache) {
    int dim = rho.dim();
    int support = diagonal_support(rho, 1e-26);
    std::vector<Eigen::VectorXd> local;
    std::vector<const Eigen::VectorXd *> coef(support);
    if (!cache) {
        local.resize(support);
    }
    for (int n = 0; n < support; n++) {
        auto build = [&] { return attenuator_sector(theta, n); };
        if (cache) {
            coef[n] = &cache->get(0, 0, n, build);
        } else {
            local[n] = build();
            coef[n] = &local[n];
        }
    }
    FockDensity out{CMat::Zero(dim, dim)};
    for (int n = 0; n < support; n++) {
        const Eigen::VectorXd &cn = *coef[n];
        for (int m = 0; m < support; m++) {
            cd x = rho.mat(n, m);
            if (x == cd(0)) {
                continue;
            }
            const Eigen::VectorXd &cm = *coef[m];
            int kmax = std::min(n, m);
            for (int k = 0; k <= kmax; k++) {
                out.mat(n - k, m - k) += cn[k] * cm[k] * x;
            }
        }
    }
    return out;
}

}  // namespace

FockDensity apply_two_mode_squeezer(const FockDensity &rho, double r, int dim_anc) {
    if (!(r >= 0)) {
        throw InvalidArgument("squeezing r must be >= 0");
    }
    if (r == 0) {
        return rho;
    }
    return squeeze_with(rho, r, dim_anc > 0 ? dim_anc : rho.dim(), nullptr);
}

FockDensity apply_attenuator(const FockDensity &rho, double theta) {
    if (!(theta >= 0 && theta <= std::numbers::pi / 2)) {
        throw InvalidArgument("attenuator angle must lie in [0, pi/2]");
    }
    if (theta == 0) {
        return rho;
    }
    return attenuate_with(rho, theta, nullptr);
}

FockDensity apply_filter(const FockDensity &rho, const FilterSpec &f) {
    if (f.k_cut < 0 || !(f.y > 0)) {
        throw InvalidArgument("filter needs K >= 0 and y > 0");
    }
    int dim = rho.dim();
    if (f.k_cut >= dim) {
        throw TruncationError("filter rank must be below the cutoff");
    }
    int ref = f.y >= 1 ? f.k_cut : 0;
    Eigen::VectorXd q = Eigen::VectorXd::Zero(dim);
    for (int n = 0; n <= f.k_cut; n++) {
        q[n] = std::pow(f.y, n - ref);
    }
    return FockDensity{q.asDiagonal() * rho.mat * q.asDiagonal()};
}

FockMoments moments(const FockDensity &rho) {
    FockMoments m{};
    m.trace = rho.trace();
    if (!(m.trace > 0)) {
        throw InvalidArgument("moments need a positive trace");
    }
    double n_sum = 0;
    cd a_sum = 0;
    for (int n = 0; n < rho.dim(); n++) {
        n_sum += n * rho.mat(n, n).real();
        if (n + 1 < rho.dim()) {
            a_sum += std::sqrt(n + 1.0) * rho.mat(n + 1, n);
        }
    }
    m.mean_n = n_sum / m.trace;
    m.mean_a = a_sum / m.trace;
    m.thermal_n = m.mean_n - std::norm(m.mean_a);
    return m;
}

double fit_geometric_nbar(const FockDensity &rho, int lo, int hi) {
    if (lo < 0 || hi >= rho.dim() || hi <= lo) {
        throw InvalidArgument("fit range must satisfy 0 <= lo < hi < dim");
    }
    double s = 0;
    for (int n = lo; n < hi; n++) {
        s += rho.mat(n + 1, n + 1).real() / rho.mat(n, n).real();
    }
    double q = s / (hi - lo);
    return q / (1 - q);
}

FockDensity apply_heterodyne_mp(const FockDensity &rho, double z, const QuadratureGrid &grid) {
    if (grid.radial_nodes < 1 || grid.angular_nodes < 1) {
        throw InvalidArgument("quadrature grid needs nodes");
    }
    int dim = rho.dim();
    FockMoments mo = moments(rho);
    double scale = grid.scale > 0 ? grid.scale : std::max(1.0, mo.thermal_n + 1);
    const LaguerreRule &rule = gauss_laguerre(grid.radial_nodes);
    int na = grid.angular_nodes;
    int np = grid.radial_nodes * na;
    // Polar grid centred on the mean amplitude.
    std::vector<cd> pts;
    std::vector<double> wts;
    pts.reserve(np);
    wts.reserve(np);
    for (int i = 0; i < grid.radial_nodes; i++) {
        double w = rule.weights[i];
        if (w <= 0) {
            continue;
        }
        double rad = std::sqrt(scale * rule.nodes[i]);
        double wi = scale * std::exp(std::log(w) + rule.nodes[i]) / na;
        for (int j = 0; j < na; j++) {
            double phi = 2 * std::numbers::pi * j / na;
            pts.push_back(mo.mean_a + std::polar(rad, phi));
            wts.push_back(wi);
        }
    }
    int p = static_cast<int>(pts.size());
    CMat kets(dim, p);
    for (int k = 0; k < p; k++) {
        kets.col(k) = coherent_ket_unchecked(pts[k], dim);
    }
    CMat rk = rho.mat * kets;
    Eigen::VectorXd mass(p);
    double total = 0;
    for (int k = 0; k < p; k++) {
        double husimi = std::max(0.0, kets.col(k).dot(rk.col(k)).real());
        mass[k] = wts[k] * husimi;
        total += mass[k];
    }
    if (std::abs(total - mo.trace) > 1e-8 * mo.trace) {
        throw QuadratureError("Husimi grid misses more than 1e-8 of the state");
    }
    std::vector<int> keep;
    for (int k = 0; k < p; k++) {
        if (mass[k] > 1e-20 * mo.trace) {
            keep.push_back(k);
        }
    }
    CMat out_kets(dim, keep.size());
    Eigen::VectorXd c(keep.size());
    for (size_t k = 0; k < keep.size(); k++) {
        out_kets.col(k) = coherent_ket_unchecked(z * pts[keep[k]], dim);
        c[k] = mass[keep[k]];
    }
    FockDensity out{out_kets * c.asDiagonal() * out_kets.adjoint()};
    if (std::abs(out.trace() - mo.trace) > 1e-6 * mo.trace) {
        throw TruncationError("re-prepared states need a larger cutoff");
    }
    return out;
}

double coherent_fidelity(const FockDensity &rho, cd amp) {
    CVec t = coherent_ket_unchecked(amp, rho.dim());
    return t.dot(rho.mat * t).real();
}

FockChannel identity_channel() {
    return FockChannel{[](const FockDensity &r) { return r; }, 1, 0, 1, true};
}

FockChannel squeezer_channel(double r) {
    if (!(r >= 0)) {
        throw InvalidArgument("squeezing r must be >= 0");
    }
    double c = std::cosh(r), s = std::sinh(r);
    auto cache = std::make_shared<SectorCache>();
    auto map = [r, cache](const FockDensity &x) {
        return r == 0 ? x : squeeze_with(x, r, x.dim(), cache.get());
    };
    return FockChannel{map, c * c, s * s, 1, true};
}

FockChannel attenuator_channel(double theta) {
    if (!(theta >= 0 && theta <= std::numbers::pi / 2)) {
        throw InvalidArgument("attenuator angle must lie in [0, pi/2]");
    }
    double t = std::cos(theta);
    auto cache = std::make_shared<SectorCache>();
    auto map = [theta, cache](const FockDensity &x) {
        return theta == 0 ? x : attenuate_with(x, theta, cache.get());
    };
    return FockChannel{map, t * t, 0, 1, true};
}

FockChannel filter_channel(const FilterSpec &f) {
    // The filtered state lives on levels 0..K, so only the input bounds
    // the cutoff.
    return FockChannel{[f](const FockDensity &x) { return apply_filter(x, f); }, 1, 0,
                       f.k_cut + 1, false};
}

FockChannel heterodyne_channel(double z, const QuadratureGrid &grid) {
    return FockChannel{[z, grid](const FockDensity &x) { return apply_heterodyne_mp(x, z, grid); },
                       z * z, z * z, 1, true};
}

namespace {

// The input is built at its own cutoff and zero-padded to the channel's.
FockDensity padded_input(cd alpha, double nbar, int &in_dim, int dim) {
    while (true) {
        int d = std::min(in_dim, dim);
        try {
            FockDensity small = displaced_thermal_density(alpha, nbar, d);
            if (d == dim) {
                return small;
            }
            FockDensity out{CMat::Zero(dim, dim)};
            out.mat.topLeftCorner(d, d) = small.mat;
            return out;
        } catch (const TruncationError &) {
            if (d >= dim) {
                throw;
            }
            in_dim *= 2;
        }
    }
}

struct PassResult {
    double num = 0;
    double den = 0;
    double skipped = 0;
    int max_dim_used = 0;
};

PassResult average_pass(const NoisyEnsemble &ens, const FockChannel &ch, int base_dim,
                        int nodes, const NumericOptions &opt) {
    PhotonBook pb = photon_book(ens);
    const LaguerreRule &rule = gauss_laguerre(nodes);
    int na = std::max(1, opt.angular_nodes);
    PassResult res;
    // Once the remaining prior weight is a small fraction of the tolerance
    // the rest of the tail is not evaluated; it still counts as skipped.
    std::vector<double> rest(nodes + 1, 0.0);
    for (int i = nodes - 1; i >= 0; i--) {
        rest[i] = rest[i + 1] + rule.weights[i];
    }
    bool beyond = false;
    for (int i = 0; i < nodes; i++) {
        double w = rule.weights[i];
        if (!beyond && rest[i] <= 1e-3 * opt.tolerance) {
            beyond = true;
        }
        if (beyond) {
            res.skipped += w;
            continue;
        }
        double amp2 = rule.nodes[i] * pb.n_c;
        double radius = std::sqrt(amp2);
        int need = std::max({safe_cutoff(amp2, pb.n_t),
                             safe_cutoff(amp2 * ch.gain2, pb.n_t * ch.gain2 + ch.added),
                             ch.min_dim});
        int dim = base_dim;
        while (dim < need) {
            dim *= 2;
        }
        int in_dim = base_dim;
        while (in_dim < safe_cutoff(amp2, pb.n_t)) {
            in_dim *= 2;
        }
        double num = 0, den = 0;
        bool done = false;
        while (!done && dim <= opt.max_dim) {
            try {
                num = 0;
                den = 0;
                for (int j = 0; j < na; j++) {
                    cd alpha = std::polar(radius, 2 * std::numbers::pi * j / na);
                    FockDensity in = padded_input(alpha, pb.n_t, in_dim, dim);
                    FockDensity out = ch.map(in);
                    num += coherent_fidelity(out, ens.g_prime * alpha) / na;
                    den += out.trace() / na;
                }
                done = true;
            } catch (const TruncationError &) {
                dim *= 2;
            }
        }
        if (!done) {
            // Nodes are sorted by radius, so every later node needs at
            // least this cutoff as well.
            beyond = true;
            res.skipped += w;
            continue;
        }
        res.max_dim_used = std::max(res.max_dim_used, dim);
        res.num += w * num;
        res.den += w * den;
    }
    return res;
}

double pass_value(const PassResult &r, bool trace_preserving) {
    if (trace_preserving) {
        return r.num;
    }
    if (!(r.den > 0)) {
        throw ConvergenceError("filtered states carry no weight");
    }
    return r.num / r.den;
}

}  // namespace

NumericFidelity avg_fidelity_numeric(const NoisyEnsemble &ens, const FockChannel &ch,
                                     const NumericOptions &opt) {
    if (opt.dim < 1 || opt.radial_nodes < 1) {
        throw InvalidArgument("numeric average needs dim >= 1 and nodes >= 1");
    }
    int base = opt.dim;
    while (true) {
        PassResult a = average_pass(ens, ch, base, opt.radial_nodes, opt);
        NumericFidelity out{};
        out.value = pass_value(a, ch.trace_preserving);
        out.numerator = a.num;
        out.denominator = a.den;
        out.skipped_mass = a.skipped;
        out.dim = base;
        out.radial_nodes = opt.radial_nodes;
        out.max_dim_used = a.max_dim_used;
        if (!opt.check_convergence) {
            if (a.skipped > opt.tolerance) {
                throw ConvergenceError("prior mass beyond the largest cutoff exceeds tolerance");
            }
            return out;
        }
        PassResult b = average_pass(ens, ch, 2 * base, 2 * opt.radial_nodes, opt);
        out.shift = std::abs(pass_value(b, ch.trace_preserving) - out.value);
        if (out.shift <= opt.tolerance && a.skipped <= opt.tolerance &&
            b.skipped <= opt.tolerance) {
            return out;
        }
        if (2 * base > opt.max_base_dim) {
            throw ConvergenceError("numeric average did not converge within the largest cutoff");
        }
        base *= 2;
    }
}

double avg_fidelity_numeric(const NoisyEnsemble &ens, const FockChannel &ch, int dim,
                            int radial_nodes) {
    NumericOptions opt;
    opt.dim = dim;
    opt.radial_nodes = radial_nodes;
    return avg_fidelity_numeric(ens, ch, opt).value;
}

}  // namespace noisyamp
