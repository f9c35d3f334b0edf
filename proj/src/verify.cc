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

#include "noisyamp/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "noisyamp/bounds.h"
#include "noisyamp/errors.h"
#include "noisyamp/fock.h"
#include "noisyamp/formulas.h"
#include "noisyamp/gaussian.h"
#include "noisyamp/optimize.h"
#include "noisyamp/params.h"

namespace noisyamp {

namespace {

const double kNc[] = {0.5, 1.0, 2.0};
const double kNt[] = {0.25, 0.5, 1.0};

// Uniform [0, 1) from the top 53 bits; identical on every platform.
class Uniform {
  public:
    explicit Uniform(std::uint64_t seed) : gen_(seed) {}
    double operator()() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double in(double lo, double hi) { return lo + (hi - lo) * (*this)(); }

  private:
    std::mt19937_64 gen_;
};

std::string fmt(const char *f, double a, double b, double c) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::string point_name(const char *stem, double nc, double nt, double g) {
    return std::string(stem) + fmt("[nc=%g,nt=%g,g=%.6g]", nc, nt, g);
}

double threshold_of(double nc, double nt) {
    return (nc + nt + 1) / nc;
}

// Runs body, which appends checks, and stamps the elapsed time on them.
void timed(std::vector<Check> &out, const std::function<void(std::vector<Check> &)> &body) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> local;
    body(local);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    for (Check &c : local) {
        c.wall_time_ms = ms / local.size();
        out.push_back(std::move(c));
    }
}

NumericOptions numeric(const VerifyOptions &opt, double tol) {
    NumericOptions o;
    o.dim = opt.dim;
    o.radial_nodes = 80;
    o.tolerance = tol;
    o.check_convergence = false;
    return o;
}

void squeezer_point(std::vector<Check> &out, const VerifyOptions &opt, double nc, double nt,
                    double g) {
    NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, g);
    double c = *tune(e).cosh_r;
    NumericFidelity f = avg_fidelity_numeric(e, squeezer_channel(std::acosh(c)), numeric(opt, 1e-4));
    out.push_back(make_check(point_name("squeezer_fock_vs_optimum", nc, nt, g), 1, CheckKind::Near,
                             det_fidelity(e), f.value, 1e-4));
}

void criterion1(std::vector<Check> &out, const VerifyOptions &opt) {
    for (double nc : kNc) {
        for (double nt : kNt) {
            if (opt.level == VerifyLevel::Fast && !(nc == 1.0 && nt == 0.5)) {
                continue;
            }
            double th = threshold_of(nc, nt);
            for (double g : {th, th + 0.5, 2 * th}) {
                timed(out, [&](std::vector<Check> &o) { squeezer_point(o, opt, nc, nt, g); });
            }
        }
    }
}

void criterion2(std::vector<Check> &out, const VerifyOptions &opt) {
    auto one = [&](double nc, double nt, double g) {
        timed(out, [&](std::vector<Check> &o) {
            NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, g);
            double f = avg_fidelity_numeric(e, identity_channel(), numeric(opt, 1e-7)).value;
            double expect = 1 / ((g - 1) * (g - 1) * nc + nt + 1);
            o.push_back(make_check(point_name("identity_fock_vs_formula", nc, nt, g), 2,
                                   CheckKind::Near, expect, f, 1e-6));
        });
    };
    for (double nc : kNc) {
        for (double nt : kNt) {
            for (double g : {1.0, 1.2}) {
                one(nc, nt, g);
            }
        }
    }
    timed(out, [&](std::vector<Check> &o) {
        NoisyEnsemble e = NoisyEnsemble::from_photons(1, 1, 2);
        double f = avg_fidelity_numeric(e, identity_channel(), numeric(opt, 1e-7)).value;
        o.push_back(make_check("identity_fock_worked_point[nc=1,nt=1,g=2]", 2, CheckKind::Near,
                               1.0 / 3, f, 1e-6));
    });
}

void criterion3(std::vector<Check> &out, const VerifyOptions &opt) {
    NoisyEnsemble e = NoisyEnsemble::from_photons(1, 1, 1.5);
    double y = *tune(e).y;
    double limit = prob_fidelity(e);
    std::vector<int> ks = {5, 10, 20, 40};
    std::vector<double> fk;
    for (int k : ks) {
        timed(out, [&](std::vector<Check> &o) {
            double f = avg_fidelity_numeric(e, filter_channel({k, y}), numeric(opt, 1e-9)).value;
            fk.push_back(f);
            AmpConvergence ac = amp_convergence_terms(e, y, k);
            // The oracle itself carries ~1e-9 of quadrature error.
            o.push_back(make_check("filter_deficit_within_bound[K=" + std::to_string(k) + "]", 3,
                                   CheckKind::AtMost, ac.deficit_bound, limit - f, 1e-9));
        });
    }
    for (size_t i = 1; i < fk.size(); i++) {
        out.push_back(make_check("filter_fidelity_increases[K=" + std::to_string(ks[i - 1]) + "->" +
                                     std::to_string(ks[i]) + "]",
                                 3, CheckKind::AtLeast, 0, fk[i] - fk[i - 1], 0));
    }
    out.push_back(make_check("filter_fidelity_reaches_optimum[K=40]", 3, CheckKind::Near, limit,
                             fk.back(), 1e-3));
}

void criterion4(std::vector<Check> &out, const VerifyOptions &opt) {
    struct P {
        double nc, nt, g;
    };
    std::vector<P> pts = {{1, 0, 1}, {1, 1, 2}};
    if (opt.level == VerifyLevel::Full) {
        pts.push_back({0.5, 0.25, 1.5});
        pts.push_back({2, 1, 0.5});
        pts.push_back({1, 0.5, 3});
    }
    for (const P &p : pts) {
        timed(out, [&](std::vector<Check> &o) {
            NoisyEnsemble e = NoisyEnsemble::from_photons(p.nc, p.nt, p.g);
            double z = tune(e).z;
            double f = avg_fidelity_numeric(e, heterodyne_channel(z), numeric(opt, 1e-5)).value;
            double c = cft(e);
            o.push_back(make_check(point_name("mp_fock_vs_benchmark", p.nc, p.nt, p.g), 4,
                                   CheckKind::Near, c, f, 1e-4));
            o.push_back(make_check(point_name("benchmark_below_mp_fock", p.nc, p.nt, p.g), 4,
                                   CheckKind::AtMost, f, c, 1e-4));
            o.push_back(make_check(point_name("mp_fock_below_bound", p.nc, p.nt, p.g), 4,
                                   CheckKind::AtMost, cft_bound(e), f, 1e-4));
        });
    }
    out.push_back(make_check("mp_worked_point[nc=1,nt=0,g=1]", 4, CheckKind::Near, 2.0 / 3,
                             cft(NoisyEnsemble::from_photons(1, 0, 1)), 1e-12));
    out.push_back(make_check("mp_worked_point[nc=1,nt=1,g=2]", 4, CheckKind::Near, 3.0 / 11,
                             cft(NoisyEnsemble::from_photons(1, 1, 2)), 1e-12));
}

void criterion5(std::vector<Check> &out) {
    double worst = 1;
    for (int i = 0; i < 5; i++) {
        for (int j = 0; j < 5; j++) {
            for (int k = 0; k < 5; k++) {
                double nc = 0.25 + i * (2 - 0.25) / 4;
                double nt = j * 0.25;
                double g = 0.5 + k * (3 - 0.5) / 4;
                NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, g);
                // Heralded strategies contain the deterministic ones, so the
                // quantum optimum is the probabilistic one.
                worst = std::min(worst, quantum_prob_optimum(e) - cft(e));
            }
        }
    }
    out.push_back(make_check("benchmark_gap_min_margin[5x5x5]", 5, CheckKind::AtLeast, 1e-6, worst,
                             0));
}

void criterion6(std::vector<Check> &out, const VerifyOptions &opt) {
    Uniform u(opt.seed * 0x9e3779b97f4a7c15ULL + 6);
    double min_gap = 1, max_above = 0, max_below = 0;
    int samples = opt.level == VerifyLevel::Full ? 2000 : 200;
    for (int s = 0; s < samples; s++) {
        double nc = u.in(0.25, 2), nt = u.in(0.05, 1);
        double th = threshold_of(nc, nt);
        double g = u.in(1, th);
        if (g <= 1 || g >= th) {
            continue;
        }
        NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, g);
        min_gap = std::min(min_gap, prob_fidelity(e) - det_fidelity(e));
        NoisyEnsemble hi = NoisyEnsemble::from_photons(nc, nt, th * u.in(1, 3));
        max_above = std::max(max_above, std::abs(prob_fidelity(hi) - det_fidelity(hi)));
        NoisyEnsemble lo = NoisyEnsemble::from_photons(nc, nt, u.in(0, 1));
        max_below = std::max(max_below,
                             std::abs(quantum_prob_optimum(lo) - quantum_det_optimum(lo)));
    }
    for (double nc : kNc) {
        for (double nt : kNt) {
            NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, threshold_of(nc, nt));
            max_above = std::max(max_above, std::abs(prob_fidelity(e) - det_fidelity(e)));
            NoisyEnsemble one = NoisyEnsemble::from_photons(nc, nt, 1);
            max_below = std::max(max_below,
                                 std::abs(quantum_prob_optimum(one) - quantum_det_optimum(one)));
        }
    }
    out.push_back(make_check("prob_exceeds_det_in_window[sampled]", 6, CheckKind::Above, 0,
                             min_gap, 0));
    out.push_back(make_check("prob_equals_det_above_threshold", 6, CheckKind::AtMost, 0, max_above,
                             1e-12));
    out.push_back(make_check("prob_equals_det_purification", 6, CheckKind::AtMost, 0, max_below,
                             1e-12));
    // Inside the window the two optima touch where the tuned filter gain is
    // exactly one, g' = 1 + N_T / N_C.
    double touch = 0;
    for (double nc : kNc) {
        for (double nt : kNt) {
            NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, 1 + nt / nc);
            touch = std::max(touch, std::abs(prob_fidelity(e) - det_fidelity(e)));
        }
    }
    out.push_back(make_check("prob_equals_det_at_unit_filter_gain", 6, CheckKind::AtMost, 0, touch,
                             1e-12));
}

void criterion7(std::vector<Check> &out) {
    double det_jump = 0, prob_jump = 0, puri_jump = 0;
    for (double nc : {0.25, 0.5, 1.0, 2.0, 5.0}) {
        for (double nt : {0.0, 0.25, 0.5, 1.0, 3.0}) {
            PhotonBook pb{nc, nt, nt + 1};
            Branches d = det_branches(NoisyEnsemble::from_photons(nc, nt, det_threshold(pb)));
            det_jump = std::max(det_jump, std::abs(d.first - d.second));
            Branches p = prob_branches(NoisyEnsemble::from_photons(nc, nt, prob_threshold(pb)));
            prob_jump = std::max(prob_jump, std::abs(p.first - p.second));
            NoisyEnsemble one = NoisyEnsemble::from_photons(nc, nt, 1);
            puri_jump = std::max(puri_jump, std::abs(prob_branches(one).second - puri_fidelity(one)));
        }
    }
    out.push_back(make_check("det_branches_meet", 7, CheckKind::AtMost, 0, det_jump, 1e-12));
    out.push_back(make_check("prob_branches_meet", 7, CheckKind::AtMost, 0, prob_jump, 1e-12));
    out.push_back(make_check("prob_meets_purification_at_unit_gain", 7, CheckKind::AtMost, 0,
                             puri_jump, 1e-12));
}

void criterion8(std::vector<Check> &out, const VerifyOptions &opt) {
    timed(out, [&](std::vector<Check> &o) {
        Uniform u(opt.seed * 0x9e3779b97f4a7c15ULL + 8);
        double worst = 0;
        for (int s = 0; s < 100; s++) {
            CirculantTriple t{u.in(-3, 3), u.in(-3, 3), u.in(-3, 3), 2 + s % 7};
            std::complex<double> prod = 1;
            for (auto ev : circulant_eigs(t)) {
                prod *= ev;
            }
            double dense = circulant_dense(t).determinant();
            double scale = std::max({std::abs(dense), std::abs(prod), 1e-300});
            worst = std::max(worst, std::abs(prod - dense) / scale);
        }
        o.push_back(make_check("circulant_eig_product_vs_dense_det[100 triples]", 8,
                               CheckKind::AtMost, 0, worst, 1e-10));
    });
    timed(out, [&](std::vector<Check> &o) {
        double worst = 0;
        int not_trending = 0;
        for (double nc : kNc) {
            for (double nt : kNt) {
                for (double g : {1.0, 1.2, 1.5, 2.0}) {
                    NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, g);
                    for (double f : {0.25, 0.5}) {
                        double kappa = f * kappa_limit(e);
                        double lim = det_limit(coeffs(e, kappa));
                        double d4 = std::abs(finite_p_root(e, kappa, 4) - lim);
                        double d8 = std::abs(finite_p_root(e, kappa, 8) - lim);
                        double d16 = std::abs(finite_p_root(e, kappa, 16) - lim);
                        if (!(d4 >= d8 && d8 >= d16)) {
                            not_trending++;
                        }
                        worst = std::max(worst, std::abs(finite_p_root(e, kappa, 64) - lim) / lim);
                    }
                }
            }
        }
        o.push_back(make_check("finite_p_root_deviation[p=64]", 8, CheckKind::AtMost, 0, worst,
                               1e-3));
        o.push_back(make_check("finite_p_root_trend[p=4,8,16]", 8, CheckKind::AtMost, 0,
                               not_trending, 0));
        NoisyEnsemble e = NoisyEnsemble::from_photons(1, 1, 1.5);
        double k = 0.5 * kappa_limit(e);
        o.push_back(make_check("block_determinant_identity[p=4]", 8, CheckKind::Near,
                               finite_p_root(e, k, 4), finite_p_root_block(e, k, 4), 1e-10, true));
    });
    for (double nc : kNc) {
        for (double nt : kNt) {
            double th = threshold_of(nc, nt);
            for (double g : {1.0, 1.2, 1 + nt / nc, (1 + nt / nc + th) / 2, th, th + 0.5, 2 * th}) {
                timed(out, [&](std::vector<Check> &o) {
                    NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, g);
                    BoundMinimum m = minimize_bound_numeric(e);
                    o.push_back(make_check(point_name("kappa_star_vs_numeric_min", nc, nt, g), 8,
                                           CheckKind::Near, kappa_star(e), m.kappa, 1e-8));
                    o.push_back(make_check(point_name("min_bound_vs_det_optimum", nc, nt, g), 8,
                                           CheckKind::Near, det_fidelity(e), m.value, 1e-12));
                });
            }
        }
    }
}

void criterion9(std::vector<Check> &out, const VerifyOptions &opt) {
    (void)opt;
    double worst_det = 0, worst_prob = 0, worst_gauss = 0;
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double mu : {1.0, 2.0, 4.0}) {
            for (int n : {1, 2, 3}) {
                for (int m : {1, 2, 5}) {
                    // Deterministic: choose g at and above the threshold.
                    MultimodeTask task{lambda, mu, 1, n, m};
                    NoisyEnsemble e = reduce(task);
                    PhotonBook pb = photon_book(e);
                    for (double gp : {det_threshold(pb), 1.7 * det_threshold(pb)}) {
                        task.g = gp * std::sqrt(static_cast<double>(n) / m);
                        DetPhotons d = photon_output_det(task);
                        double nc = pb.n_c, nt_total = n / mu;
                        double c = task.g * nc / (1 + nc + nt_total / n);
                        double printed_total =
                            c * c * (static_cast<double>(m) / n) * (nt_total / n + 1) - 1;
                        double printed_single = c * c * (1.0 / n) * (1 / mu + 1) - 1.0 / m;
                        worst_det = std::max({worst_det, std::abs(d.n_total_out - printed_total),
                                              std::abs(d.n_single_out - printed_single)});
                        NoisyEnsemble er = reduce(task);
                        DisplacedThermal s = apply_gaussian(
                            {1.0, pb.n_t}, ChannelParam::squeezer_cosh(*tune(er).cosh_r));
                        worst_gauss = std::max(worst_gauss, std::abs(s.nbar - d.n_total_out));
                    }
                    // Probabilistic: g inside the first filter window.
                    double gp = 1 + 0.5 * (prob_threshold(pb) - 1);
                    task.g = gp * std::sqrt(static_cast<double>(n) / m);
                    NoisyEnsemble er = reduce(task);
                    double y = *tune(er).y;
                    ProbPhotons p = photon_output_prob(task, y);
                    double nc = pb.n_c, nt_total = n / mu, ns = 1 / mu, g = task.g;
                    double big = (1 + mu) * std::pow(nc + nt_total / n, 2) -
                                 g * g * nc * nc * m / n;
                    double printed_total = nt_total * m * mu * g * g * nc * nc / (n * n * big);
                    double big1 = (1 + mu) * (nc + ns) * (nc + ns) - g * g * nc * nc * m / n;
                    double printed_single = ns * mu * g * g * nc * nc / (n * big1);
                    worst_prob = std::max({worst_prob, std::abs(p.n_total_out - printed_total),
                                           std::abs(p.n_single_out - printed_single)});
                    DisplacedThermal f = apply_noiseless_filter({0.0, pb.n_t}, y);
                    worst_gauss = std::max(worst_gauss, std::abs(f.nbar - p.n_t_out));
                }
            }
        }
    }
    out.push_back(make_check("det_photon_formula_vs_printed", 9, CheckKind::AtMost, 0, worst_det,
                             1e-12));
    out.push_back(make_check("prob_photon_formula_vs_printed", 9, CheckKind::AtMost, 0, worst_prob,
                             1e-12));
    out.push_back(make_check("gaussian_nbar_vs_photon_formulas", 9, CheckKind::AtMost, 0,
                             worst_gauss, 1e-12));
    DetPhotons w = photon_output_det(MultimodeTask{0.5, 2, 2, 1, 1});
    out.push_back(make_check("det_photon_worked_point[47/49]", 9, CheckKind::Near, 47.0 / 49,
                             w.n_single_out, 1e-12));
    timed(out, [&](std::vector<Check> &o) {
        // Thermal input N_T = 1 through the rank-40 filter at y = 1.25.
        FockDensity th = thermal_density(1, 256);
        FockDensity f = apply_filter(th, {40, 1.25});
        double fit = fit_geometric_nbar(f, 0, 30);
        ProbPhotons p = photon_output_prob(MultimodeTask{1, 1, 1, 1, 1}, 1.25);
        o.push_back(make_check("fock_filtered_thermal_nbar[y=1.25,K=40]", 9, CheckKind::Near,
                               p.n_t_out, fit, 1e-3));
        // Displaced input at the tuned gain y = 0.75, moments of the output.
        NoisyEnsemble e = NoisyEnsemble::from_photons(1, 1, 1.5);
        double y = *tune(e).y;
        FockDensity in = displaced_thermal_density(1.0, 1, 128);
        FockMoments mo = moments(apply_filter(in, {40, y}));
        DisplacedThermal law = apply_noiseless_filter({1.0, 1}, y);
        o.push_back(make_check("fock_filtered_displaced_nbar[y=0.75,K=40]", 9, CheckKind::Near,
                               law.nbar, mo.thermal_n, 1e-3));
    });
}

void supplementary(std::vector<Check> &out, const VerifyOptions &opt) {
    NumericOptions conv;
    conv.dim = opt.dim;
    conv.radial_nodes = 80;
    conv.tolerance = 1e-6;
    conv.check_convergence = true;
    struct P {
        double nc, nt, g;
    };
    for (const P &p : std::vector<P>{{0.5, 0.25, 2}, {1, 0.5, 1.5}, {2, 1, 2}}) {
        timed(out, [&](std::vector<Check> &o) {
            NoisyEnsemble e = NoisyEnsemble::from_photons(p.nc, p.nt, p.g);
            ChannelParam ch = ChannelParam::squeezer_cosh(1.3);
            double f = avg_fidelity_numeric(e, squeezer_channel(ch.value), conv).value;
            o.push_back(make_check(point_name("squeezer_fock_vs_gaussian[cosh r=1.3]", p.nc, p.nt,
                                              p.g),
                                   0, CheckKind::Near, avg_fidelity_gaussian(e, ch), f, 1e-5));
        });
    }
    for (const P &p : std::vector<P>{{2, 1, 0.5}, {1, 0.5, 0.8}}) {
        timed(out, [&](std::vector<Check> &o) {
            NoisyEnsemble e = NoisyEnsemble::from_photons(p.nc, p.nt, p.g);
            double t = *tune(e).cos_theta;
            double f = avg_fidelity_numeric(e, attenuator_channel(std::acos(t)), conv).value;
            o.push_back(make_check(point_name("attenuator_fock_vs_optimum", p.nc, p.nt, p.g), 0,
                                   CheckKind::Near, puri_fidelity(e), f, 1e-5));
        });
    }
    timed(out, [&](std::vector<Check> &o) {
        NoisyEnsemble e = NoisyEnsemble::from_photons(1, 0.5, 1.5);
        FockChannel ch = squeezer_channel(std::acosh(1.2));
        NumericOptions a = numeric(opt, 1e-9);
        double radial = avg_fidelity_numeric(e, ch, a).value;
        a.angular_nodes = 32;
        double full = avg_fidelity_numeric(e, ch, a).value;
        o.push_back(make_check("radial_vs_polar_prior_grid", 0, CheckKind::Near, radial, full,
                               1e-10));
    });
    timed(out, [&](std::vector<Check> &o) {
        NoisyEnsemble e = NoisyEnsemble::from_photons(1, 1, 1);
        CftNumericNorm n = cft_norm_numeric(e, 48, 80);
        o.push_back(make_check("cft_operator_norm_numeric[dim=48]", 0, CheckKind::Near,
                               cft_norm_closed(e), n.top_eigenvalue, 1e-3));
        CftBoundTerms t = cft_terms(e);
        o.push_back(make_check("cft_terms_reproduce_bound", 0, CheckKind::Near, cft_bound(e),
                               t.c1 * cft_norm_closed(e), 1e-12));
    });
    double worst_sq = 0, worst_arg = 0, worst_att = 0, worst_z = 0, worst_prob = 0;
    for (double nc : kNc) {
        for (double nt : kNt) {
            double th = threshold_of(nc, nt);
            for (double g : {1.0, 1.3, th, 1.5 * th}) {
                NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, g);
                ChannelOptimum best = maximize_squeezer(e);
                worst_sq = std::max(worst_sq, std::abs(best.fidelity / det_fidelity(e) - 1));
                worst_arg = std::max(worst_arg, std::abs(best.parameter - *tune(e).cosh_r));
                worst_prob = std::max(worst_prob, std::abs(prob_via_kappa_prime(e) - prob_fidelity(e)));
                ScalarOptimum z = golden_max([&](double x) { return mp_fidelity(e, x); }, 0,
                                             4 * g, 1e-10);
                worst_z = std::max({worst_z, std::abs(z.value - cft(e)), std::abs(z.x - tune(e).z)});
            }
            for (double g : {0.2, 0.5, 0.9}) {
                NoisyEnsemble e = NoisyEnsemble::from_photons(nc, nt, g);
                ChannelOptimum best = maximize_attenuator(e);
                worst_att = std::max({worst_att, std::abs(best.fidelity - puri_fidelity(e)),
                                      std::abs(best.parameter - *tune(e).cos_theta) * 1e-3});
            }
        }
    }
    out.push_back(make_check("squeezer_scalar_search_vs_det_optimum", 0, CheckKind::AtMost, 0,
                             worst_sq, 1e-9));
    out.push_back(make_check("squeezer_scalar_search_argmax", 0, CheckKind::AtMost, 0, worst_arg,
                             1e-5));
    out.push_back(make_check("attenuator_scalar_search_vs_purification", 0, CheckKind::AtMost, 0,
                             worst_att, 1e-9));
    out.push_back(make_check("mp_gain_search_vs_benchmark", 0, CheckKind::AtMost, 0, worst_z,
                             1e-5));
    out.push_back(make_check("average_state_bound_vs_prob_optimum", 0, CheckKind::AtMost, 0,
                             worst_prob, 1e-12));
}

}  // namespace

Check make_check(std::string name, int criterion, CheckKind kind, double expected, double observed,
                 double tolerance, bool relative) {
    Check c{std::move(name), criterion, kind, expected, observed, tolerance, relative, false, 0};
    double tol = relative ? tolerance * std::abs(expected) : tolerance;
    switch (kind) {
        case CheckKind::Near:
            c.pass = std::abs(observed - expected) <= tol;
            break;
        case CheckKind::AtMost:
            c.pass = observed <= expected + tol;
            break;
        case CheckKind::AtLeast:
            c.pass = observed >= expected - tol;
            break;
        case CheckKind::Above:
            c.pass = observed > expected;
            break;
    }
    if (!std::isfinite(observed)) {
        c.pass = false;
    }
    return c;
}

const char *check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::Near:
            return "near";
        case CheckKind::AtMost:
            return "at_most";
        case CheckKind::AtLeast:
            return "at_least";
        case CheckKind::Above:
            return "above";
    }
    return "?";
}

bool VerifyReport::all_pass() const {
    return failures() == 0;
}

int VerifyReport::failures() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.pass; }));
}

std::vector<Check> criterion_checks(int criterion, const VerifyOptions &opt) {
    std::vector<Check> out;
    switch (criterion) {
        case 0:
            supplementary(out, opt);
            break;
        case 1:
            criterion1(out, opt);
            break;
        case 2:
            criterion2(out, opt);
            break;
        case 3:
            criterion3(out, opt);
            break;
        case 4:
            criterion4(out, opt);
            break;
        case 5:
            criterion5(out);
            break;
        case 6:
            criterion6(out, opt);
            break;
        case 7:
            criterion7(out);
            break;
        case 8:
            criterion8(out, opt);
            break;
        case 9:
            criterion9(out, opt);
            break;
        default:
            throw InvalidArgument("no such criterion");
    }
    return out;
}

VerifyReport run_verify(const VerifyOptions &opt) {
    VerifyReport r;
    std::vector<int> ids = {1, 2, 4, 5, 6, 7, 9};
    if (opt.level == VerifyLevel::Full) {
        ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 0};
    }
    for (int id : ids) {
        std::vector<Check> c = criterion_checks(id, opt);
        r.checks.insert(r.checks.end(), c.begin(), c.end());
    }
    return r;
}

std::string render_report_text(const VerifyReport &r, bool timings) {
    std::ostringstream os;
    char buf[512];
    for (const Check &c : r.checks) {
        std::snprintf(buf, sizeof buf, "%-4s  c%-2d %-58s %-8s expected=%-12.6g observed=%-12.6g tol=%.1e%s",
                      c.pass ? "ok" : "FAIL", c.criterion, c.name.c_str(),
                      check_kind_name(c.kind), c.expected, c.observed, c.tolerance,
                      c.relative ? " (rel)" : "");
        os << buf;
        if (timings) {
            std::snprintf(buf, sizeof buf, "  %.1f ms", c.wall_time_ms);
            os << buf;
        }
        os << '\n';
    }
    std::snprintf(buf, sizeof buf, "%zu checks, %d failed\n", r.checks.size(), r.failures());
    os << buf;
    return os.str();
}

}  // namespace noisyamp
