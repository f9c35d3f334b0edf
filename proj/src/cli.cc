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

#include "noisyamp/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "noisyamp/errors.h"
#include "noisyamp/formulas.h"
#include "noisyamp/verify.h"

namespace noisyamp {

using Json = nlohmann::ordered_json;

const char *const kSweepHeader = "axis_value,g_prime,f_det,f_prob,f_cft,regime,cosh_r,y,cos_theta,z";

namespace {

std::string num(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string human(double v) {
    return num(v, 5);
}

std::string human(const std::optional<double> &v) {
    return v ? human(*v) : "-";
}

Json opt_json(const std::optional<double> &v) {
    return v ? Json(*v) : Json(nullptr);
}

const char *axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::G:
            return "g";
        case SweepAxis::Lambda:
            return "lambda";
        case SweepAxis::Mu:
            return "mu";
        case SweepAxis::N:
            return "n";
        case SweepAxis::M:
            return "m";
    }
    return "?";
}

Json params_json(const MultimodeTask &t) {
    NoisyEnsemble e = reduce(t);
    PhotonBook pb = photon_book(e);
    return Json{{"lambda", t.lambda},     {"mu", t.mu},       {"g", t.g},
                {"n", t.n_in},            {"m", t.m_out},     {"lambda_prime", e.lambda_prime},
                {"g_prime", e.g_prime},   {"n_c", pb.n_c},    {"n_t", pb.n_t}};
}

Json envelope(const char *command, Json params, Json result) {
    return Json{{"tool", kToolName},
                {"version", kToolVersion},
                {"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)}};
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

// Photon bookkeeping that may not exist for the task; nullopt means out of
// regime.
std::optional<DetPhotons> try_det_photons(const MultimodeTask &t) {
    if (reduce(t).g_prime < 1) {
        return std::nullopt;
    }
    return photon_output_det(t);
}

std::optional<ProbPhotons> try_prob_photons(const MultimodeTask &t, double y) {
    try {
        return photon_output_prob(t, y);
    } catch (const DomainError &) {
        return std::nullopt;
    }
}

Json det_photons_json(const DetPhotons &d) {
    return Json{{"n_single_in", d.n_single_in},   {"n_total_in", d.n_total_in},
                {"n_single_out", d.n_single_out}, {"n_total_out", d.n_total_out},
                {"identity_channel", d.identity_channel},
                {"purified", d.n_single_out < d.n_single_in}};
}

Json prob_photons_json(const ProbPhotons &p, double y) {
    return Json{{"y", y},
                {"n_single_in", p.n_single_in},
                {"n_total_in", p.n_total_in},
                {"n_t_out", p.n_t_out},
                {"n_single_out", p.n_single_out},
                {"n_total_out", p.n_total_out},
                {"no_change", y == 1.0},
                {"purified", p.n_single_out < p.n_single_in}};
}

std::string eval_text(const MultimodeTask &t) {
    NoisyEnsemble e = reduce(t);
    PhotonBook pb = photon_book(e);
    FidelityReport f = evaluate(e);
    TuningReport tu = tune(e);
    std::ostringstream os;
    os << "reduced      lambda'=" << human(e.lambda_prime) << "  mu=" << human(e.mu)
       << "  g'=" << human(e.g_prime) << "\n";
    os << "photons      N_C=" << human(pb.n_c) << "  N_T=" << human(pb.n_t) << "\n";
    os << "regime       " << regime_name(f.regime.tag) << "  (prob: "
       << regime_name(f.regime.prob_tag)
       << (f.regime.above_prob_threshold ? ", above prob threshold" : "") << ")\n";
    os << "thresholds   det=" << human(f.regime.det_threshold)
       << "  prob=" << human(f.regime.prob_threshold) << "\n";
    os << "fidelity     det=" << human(f.det) << "  prob=" << human(f.prob)
       << "  cft=" << human(f.cft) << "\n";
    os << "tuning       cosh_r=" << human(tu.cosh_r) << "  y=" << human(tu.y)
       << "  cos_theta=" << human(tu.cos_theta) << "  z=" << human(tu.z) << "\n";
    if (tu.y_below_one) {
        os << "note         tuned filter gain y < 1\n";
    }
    if (auto d = try_det_photons(t)) {
        os << "det photons  N_single " << human(d->n_single_in) << " -> " << human(d->n_single_out)
           << "  N_total " << human(d->n_total_in) << " -> " << human(d->n_total_out)
           << (d->identity_channel ? "  (identity channel)" : "") << "\n";
    }
    if (tu.y) {
        if (auto p = try_prob_photons(t, *tu.y)) {
            os << "prob photons N_single " << human(p->n_single_in) << " -> "
               << human(p->n_single_out) << "  N_total " << human(p->n_total_in) << " -> "
               << human(p->n_total_out) << "\n";
        }
    }
    return os.str();
}

Json eval_json(const MultimodeTask &t) {
    NoisyEnsemble e = reduce(t);
    FidelityReport f = evaluate(e);
    TuningReport tu = tune(e);
    Json r{{"regime", regime_name(f.regime.tag)},
           {"prob_regime", regime_name(f.regime.prob_tag)},
           {"above_prob_threshold", f.regime.above_prob_threshold},
           {"det_threshold", f.regime.det_threshold},
           {"prob_threshold", f.regime.prob_threshold},
           {"f_det", f.det},
           {"f_prob", f.prob},
           {"f_cft", f.cft},
           {"tuning",
            Json{{"cosh_r", opt_json(tu.cosh_r)},
                 {"y", opt_json(tu.y)},
                 {"cos_theta", opt_json(tu.cos_theta)},
                 {"z", tu.z},
                 {"filter_advantage", tu.filter_advantage},
                 {"y_below_one", tu.y_below_one}}}};
    auto d = try_det_photons(t);
    r["det_photons"] = d ? det_photons_json(*d) : Json(nullptr);
    std::optional<ProbPhotons> p;
    if (tu.y) {
        p = try_prob_photons(t, *tu.y);
    }
    r["prob_photons"] = p ? prob_photons_json(*p, *tu.y) : Json(nullptr);
    return r;
}

std::string photons_text(const MultimodeTask &t, const std::string &mode, double y) {
    std::ostringstream os;
    if (mode == "det") {
        DetPhotons d = photon_output_det(t);
        os << "N_single   " << human(d.n_single_in) << "\n";
        os << "N'_single  " << human(d.n_single_out) << "\n";
        os << "N_total    " << human(d.n_total_in) << "\n";
        os << "N'_total   " << human(d.n_total_out) << "\n";
        if (d.identity_channel) {
            os << "identity channel\n";
        } else {
            os << (d.n_single_out < d.n_single_in ? "net purification\n" : "no net purification\n");
        }
    } else {
        ProbPhotons p = photon_output_prob(t, y);
        os << "y          " << human(y) << "\n";
        os << "N_single   " << human(p.n_single_in) << "\n";
        os << "N'_single  " << human(p.n_single_out) << "\n";
        os << "N_total    " << human(p.n_total_in) << "\n";
        os << "N'_total   " << human(p.n_total_out) << "\n";
        if (y == 1.0) {
            os << "no change\n";
        } else {
            os << (p.n_single_out < p.n_single_in ? "net purification\n" : "no net purification\n");
        }
    }
    return os.str();
}

std::string regimes_text(const MultimodeTask &t) {
    NoisyEnsemble e = reduce(t);
    Regime r = classify(e);
    double to_g = std::sqrt(static_cast<double>(t.n_in) / t.m_out);
    std::ostringstream os;
    std::string th = human(r.det_threshold);
    char buf[160];
    auto row = [&](const std::string &range, const char *det, const char *prob) {
        std::snprintf(buf, sizeof buf, "%-22s %-12s %s\n", range.c_str(), det, prob);
        os << buf;
    };
    row("g' range", "det", "prob");
    row("g' <= 1", "Purify", "Purify");
    row("1 < g' < " + th, "DetIdentity", "ProbAmplify");
    row("g' >= " + th, "DetAmplify", "ProbPlateau");
    os << "det threshold   g'=" << human(r.det_threshold) << "  g=" << human(r.det_threshold * to_g)
       << "\n";
    os << "prob threshold  g'=" << human(r.prob_threshold)
       << "  g=" << human(r.prob_threshold * to_g) << "\n";
    os << "at g'=" << human(e.g_prime) << "  " << regime_name(r.tag) << " / "
       << regime_name(r.prob_tag) << "\n";
    return os.str();
}

Json regimes_json(const MultimodeTask &t) {
    NoisyEnsemble e = reduce(t);
    Regime r = classify(e);
    double to_g = std::sqrt(static_cast<double>(t.n_in) / t.m_out);
    return Json{{"det_threshold_g_prime", r.det_threshold},
                {"det_threshold_g", r.det_threshold * to_g},
                {"prob_threshold_g_prime", r.prob_threshold},
                {"prob_threshold_g", r.prob_threshold * to_g},
                {"regime", regime_name(r.tag)},
                {"prob_regime", regime_name(r.prob_tag)},
                {"above_prob_threshold", r.above_prob_threshold}};
}

Json verify_json(const VerifyReport &rep, bool timings) {
    Json checks = Json::array();
    for (const Check &c : rep.checks) {
        Json j{{"name", c.name},         {"criterion", c.criterion}, {"kind", check_kind_name(c.kind)},
               {"expected", c.expected}, {"observed", c.observed},   {"tolerance", c.tolerance},
               {"relative", c.relative}, {"pass", c.pass}};
        if (timings) {
            j["wall_time_ms"] = c.wall_time_ms;
        }
        checks.push_back(std::move(j));
    }
    return Json{{"checks", std::move(checks)},
                {"total", rep.checks.size()},
                {"failed", rep.failures()},
                {"pass", rep.all_pass()}};
}

std::string sweep_json(const SweepSpec &spec) {
    Json rows = Json::array();
    for (int i = 0; i < spec.steps; i++) {
        double axis_value;
        MultimodeTask t = spec.at(i, &axis_value);
        NoisyEnsemble e = reduce(t);
        FidelityReport f = evaluate(e);
        TuningReport tu = tune(e);
        rows.push_back(Json{{"axis_value", axis_value},
                            {"g_prime", e.g_prime},
                            {"f_det", f.det},
                            {"f_prob", f.prob},
                            {"f_cft", f.cft},
                            {"regime", regime_name(f.regime.tag)},
                            {"cosh_r", opt_json(tu.cosh_r)},
                            {"y", opt_json(tu.y)},
                            {"cos_theta", opt_json(tu.cos_theta)},
                            {"z", tu.z}});
    }
    Json params = params_json(spec.fixed);
    params["axis"] = axis_name(spec.axis);
    params["start"] = spec.start;
    params["stop"] = spec.stop;
    params["steps"] = spec.steps;
    return dump(envelope("sweep", std::move(params), Json{{"rows", std::move(rows)}}));
}

}  // namespace

void SweepSpec::validate() const {
    if (!(start < stop)) {
        throw InvalidArgument("sweep needs start < stop");
    }
    if (steps < 2) {
        throw InvalidArgument("sweep needs steps >= 2");
    }
    fixed.validate();
    for (int i = 0; i < steps; i++) {
        double v;
        at(i, &v).validate();
    }
}

MultimodeTask SweepSpec::at(int i, double *axis_value) const {
    double v = start + (stop - start) * i / (steps - 1);
    if (i == steps - 1) {
        v = stop;
    }
    MultimodeTask t = fixed;
    switch (axis) {
        case SweepAxis::G:
            t.g = v;
            break;
        case SweepAxis::Lambda:
            t.lambda = v;
            break;
        case SweepAxis::Mu:
            t.mu = v;
            break;
        case SweepAxis::N:
            t.n_in = static_cast<int>(std::lround(v));
            v = t.n_in;
            break;
        case SweepAxis::M:
            t.m_out = static_cast<int>(std::lround(v));
            v = t.m_out;
            break;
    }
    if (axis_value) {
        *axis_value = v;
    }
    return t;
}

std::string sweep_csv(const SweepSpec &spec) {
    std::string out = std::string(kSweepHeader) + "\n";
    auto cell = [](const std::optional<double> &v) { return v ? num(*v, 10) : std::string(); };
    for (int i = 0; i < spec.steps; i++) {
        double axis_value;
        MultimodeTask t = spec.at(i, &axis_value);
        NoisyEnsemble e = reduce(t);
        FidelityReport f = evaluate(e);
        TuningReport tu = tune(e);
        out += num(axis_value, 10) + "," + num(e.g_prime, 10) + "," + num(f.det, 10) + "," +
               num(f.prob, 10) + "," + num(f.cft, 10) + "," + regime_name(f.regime.tag) + "," +
               cell(tu.cosh_r) + "," + cell(tu.y) + "," + cell(tu.cos_theta) + "," +
               num(tu.z, 10) + "\n";
    }
    return out;
}

CommandResult run_cli(const std::vector<std::string> &args) {
    CLI::App app{"Optimal fidelities for amplifying noisy coherent states", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    MultimodeTask task;
    bool json = false;
    auto common = [&](CLI::App *sub) {
        sub->add_option("--lambda", task.lambda, "prior inverse variance")->capture_default_str();
        sub->add_option("--mu", task.mu, "input noise parameter, N_T = 1/mu")->capture_default_str();
        sub->add_option("--g", task.g, "target gain")->capture_default_str();
        sub->add_option("--n", task.n_in, "input copies")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--m", task.m_out, "output copies")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_flag("--json", json, "emit JSON");
    };

    CLI::App *eval = app.add_subcommand("eval", "fidelities, regime and tuning at one point");
    common(eval);

    CLI::App *sweep = app.add_subcommand("sweep", "sweep one parameter, write CSV");
    common(sweep);
    SweepSpec spec;
    std::string out_path = "-";
    std::map<std::string, SweepAxis> axes{{"g", SweepAxis::G},
                                          {"lambda", SweepAxis::Lambda},
                                          {"mu", SweepAxis::Mu},
                                          {"n", SweepAxis::N},
                                          {"m", SweepAxis::M}};
    sweep->add_option("--axis", spec.axis, "swept parameter")
        ->transform(CLI::CheckedTransformer(axes, CLI::ignore_case))
        ->required();
    sweep->add_option("--start", spec.start)->required();
    sweep->add_option("--stop", spec.stop)->required();
    sweep->add_option("--steps", spec.steps)->required();
    sweep->add_option("--out", out_path, "output path, - for stdout")->capture_default_str();

    CLI::App *verify = app.add_subcommand("verify", "run the oracle-vs-formula checks");
    std::string level = "fast";
    VerifyOptions vopt;
    bool timings = false;
    verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
    verify->add_option("--seed", vopt.seed)->capture_default_str();
    verify->add_option("--dim", vopt.dim, "Fock cutoff")->check(CLI::Range(8, 512))->capture_default_str();
    verify->add_flag("--timings", timings, "include wall times (breaks byte-identical output)");
    verify->add_flag("--json", json, "emit JSON");

    CLI::App *photons = app.add_subcommand("photons", "thermal photon bookkeeping");
    common(photons);
    std::string mode = "det";
    std::optional<double> y_override;
    photons->add_option("--mode", mode)->check(CLI::IsMember({"det", "prob"}))->capture_default_str();
    photons->add_option("--y", y_override, "filter gain, defaults to the tuned value");

    CLI::App *regimes = app.add_subcommand("regimes", "regime map in g'");
    common(regimes);

    CommandResult res;
    std::ostringstream out, err;
    std::vector<std::string> argv_store = args;
    std::vector<const char *> argv{kToolName};
    for (const std::string &a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        res.exit_code = code == 0 ? kExitOk : kExitUsage;
        res.out = out.str();
        res.err = err.str();
        return res;
    }

    try {
        if (*eval) {
            task.validate();
            res.out = json ? dump(envelope("eval", params_json(task), eval_json(task)))
                           : eval_text(task);
        } else if (*sweep) {
            spec.fixed = task;
            spec.validate();
            std::string body = json ? sweep_json(spec) : sweep_csv(spec);
            if (out_path == "-") {
                res.out = body;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                f << body;
                f.close();
                if (!f) {
                    res.err = "cannot write " + out_path + "\n";
                    res.exit_code = kExitIo;
                    return res;
                }
            }
        } else if (*verify) {
            vopt.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Fast;
            VerifyReport rep = run_verify(vopt);
            Json params{{"level", level}, {"seed", vopt.seed}, {"dim", vopt.dim}};
            res.out = json ? dump(envelope("verify", params, verify_json(rep, timings)))
                           : render_report_text(rep, timings);
            if (!rep.all_pass()) {
                res.exit_code = kExitVerify;
            }
        } else if (*photons) {
            task.validate();
            double y = 1;
            if (mode == "prob") {
                if (y_override) {
                    y = *y_override;
                } else {
                    std::optional<double> tuned = tune(reduce(task)).y;
                    if (!tuned) {
                        throw DomainError("no filter gain below g' = 1");
                    }
                    y = *tuned;
                }
            }
            if (json) {
                Json r = mode == "det" ? det_photons_json(photon_output_det(task))
                                       : prob_photons_json(photon_output_prob(task, y), y);
                Json params = params_json(task);
                params["mode"] = mode;
                res.out = dump(envelope("photons", params, r));
            } else {
                res.out = photons_text(task, mode, y);
            }
        } else if (*regimes) {
            task.validate();
            res.out = json ? dump(envelope("regimes", params_json(task), regimes_json(task)))
                           : regimes_text(task);
        }
    } catch (const InvalidArgument &e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = kExitUsage;
    } catch (const Error &e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = kExitDomain;
    }
    return res;
}

}  // namespace noisyamp
