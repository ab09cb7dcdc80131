// Copyright 2026 The qac Authors
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

#include "qac/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "qac/anticlone.hpp"
#include "qac/errors.hpp"
#include "qac/optimizer.hpp"
#include "qac/random.hpp"

namespace qac::cli {

using nlohmann::json;

void Report::expect_at_most(std::string name, double value, double tolerance) {
    checks.push_back({std::move(name), value, "<=", tolerance, value <= tolerance});
}

void Report::expect_at_least(std::string name, double value, double tolerance) {
    checks.push_back({std::move(name), value, ">=", tolerance, value >= tolerance});
}

bool Report::all_pass() const {
    return !error && std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

RunConfig parse_args(const std::vector<std::string> &args) {
    RunConfig cfg;
    CLI::App app{"Anti-cloning verification campaigns", "qac"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--output", cfg.output_path, "Write the report here instead of standard output");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--timing", cfg.timing, "Include wall-clock duration in the report");

    std::uint64_t samples = 0;
    double tol = 0.0;
    auto *verify = app.add_subcommand("verify", "Check the optimal anti-cloner on random inputs");
    auto *verify_samples = verify->add_option("--samples", samples, "Random input directions")
                               ->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "Generator seed");
    auto *verify_tol = verify->add_option("--tol", tol, "Tolerance for density-matrix and fidelity checks")
                           ->check(CLI::PositiveNumber);

    auto *optimize = app.add_subcommand("optimize", "Re-derive the optimal fidelity numerically");
    optimize->add_option("--restarts", cfg.restarts, "Independent restarts")->check(CLI::PositiveNumber);
    optimize->add_option("--iters", cfg.iters, "Iterations per annealing stage")->check(CLI::PositiveNumber);
    optimize->add_option("--ancilla-dim", cfg.ancilla_dim, "Ancilla dimension")->check(CLI::PositiveNumber);
    optimize->add_flag("--spinflip", cfg.spinflip, "Optimize the universal spin flip instead");
    optimize->add_option("--seed", cfg.seed, "Generator seed");

    double theta = 0.0;
    auto *prob = app.add_subcommand("prob", "Probabilistic exact anti-cloning of two states");
    prob->add_option("--theta", theta, "Angle between the two states, radians, in (0, pi/2]")->required();
    prob->add_option("--shots", cfg.shots, "Simulated probe measurements per input (0: exact only)");
    prob->add_option("--seed", cfg.seed, "Generator seed");

    auto *feasibility = app.add_subcommand("feasibility", "Maximum exact anti-cloning probability of a state set");
    feasibility->add_option("--states", cfg.states_path, "JSON state-list file")
        ->required()
        ->check(CLI::ExistingFile);
    feasibility->add_option("--L", cfg.L, "Parallel copies");
    feasibility->add_option("--M", cfg.M, "Anti-parallel copies");

    auto *baseline = app.add_subcommand("baseline", "Measure-and-prepare anti-cloning");
    auto *baseline_samples = baseline->add_option("--samples", samples, "Monte Carlo samples")
                                 ->check(CLI::PositiveNumber);
    baseline->add_option("--seed", cfg.seed, "Generator seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw UsageError(app.help(), 0);
    } catch (const CLI::CallForAllHelp &) {
        throw UsageError(app.help("", CLI::AppFormatMode::All), 0);
    } catch (const CLI::ParseError &e) {
        throw UsageError(std::string(e.what()) + "\n" + app.help());
    }

    cfg.format = format == "csv" ? Format::csv : Format::json;
    if (verify->parsed()) {
        cfg.subcommand = Subcommand::verify;
        if (verify_samples->count() > 0) cfg.samples = samples;
        if (verify_tol->count() > 0) cfg.tol = tol;
    } else if (optimize->parsed()) {
        cfg.subcommand = Subcommand::optimize;
    } else if (prob->parsed()) {
        cfg.subcommand = Subcommand::prob;
        cfg.theta = theta;
    } else if (feasibility->parsed()) {
        cfg.subcommand = Subcommand::feasibility;
        if (cfg.L + cfg.M == 0) throw UsageError("feasibility: --L + --M must be at least 1");
    } else {
        cfg.subcommand = Subcommand::baseline;
        if (baseline_samples->count() > 0) cfg.samples = samples;
    }
    return cfg;
}

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Report run_verify(const RunConfig &cfg) {
    Report rep;
    const std::uint64_t samples = cfg.samples.value_or(1000);
    const double tol = cfg.tol.value_or(1e-9);
    rep.parameters = {{"samples", samples}, {"seed", cfg.seed}, {"tol", tol}};

    const CMatrix v = paper_isometry();
    CounterRng rng(derive_seed(cfg.seed, 0));
    double max_rho_dev = 0.0, max_f_dev = 0.0, max_anti = 0.0;
    double sum_eta = 0.0;
    std::vector<double> fids;
    fids.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const BlochVector n = haar_direction(rng);
        const CloneOutput out = anticlone(bloch_to_state(n), v);
        const auto [t1, t2] = target_forms(n, 1.0 / 3.0);
        max_rho_dev = std::max({max_rho_dev, max_abs_diff(out.rho1, t1), max_abs_diff(out.rho2, t2)});
        max_f_dev = std::max({max_f_dev, std::abs(out.f1 - 2.0 / 3.0), std::abs(out.f2 - 2.0 / 3.0)});
        const BlochVector b1 = state_to_bloch(out.rho1), b2 = state_to_bloch(out.rho2);
        max_anti = std::max(max_anti, BlochVector{b1.nx + b2.nx, b1.ny + b2.ny, b1.nz + b2.nz}.norm());
        fids.push_back(out.f1);
        sum_eta += out.eta1;
    }
    const double n = static_cast<double>(samples);
    double mean_f = 0.0, var_f = 0.0;
    for (double f : fids) mean_f += f / n;
    for (double f : fids) var_f += (f - mean_f) * (f - mean_f) / n;
    const double sd_f = std::sqrt(var_f);

    rep.expect_at_most("max_universality_deviation", max_rho_dev, tol);
    rep.expect_at_most("max_fidelity_deviation", max_f_dev, tol);
    rep.expect_at_most("max_bloch_anticorrelation", max_anti, 1e-10);
    rep.expect_at_most("fidelity_stddev", sd_f, 1e-10);
    rep.expect_at_most("max_constraint_residual", constraint_residuals(paper_params()).max(), 1e-12);
    rep.expect_at_most("isometry_defect", isometry_defect(v), 1e-12);
    rep.info = {{"mean_fidelity", mean_f}, {"mean_eta", sum_eta / n}};
    return rep;
}

Report run_optimize(const RunConfig &cfg) {
    Report rep;
    OptimizerConfig oc;
    oc.restarts = cfg.restarts;
    oc.max_iters = cfg.iters;
    oc.ancilla_dim = cfg.ancilla_dim;
    oc.seed = cfg.seed;
    rep.parameters = {{"restarts", oc.restarts}, {"iters", oc.max_iters},   {"ancilla_dim", oc.ancilla_dim},
                      {"seed", oc.seed},         {"spinflip", cfg.spinflip}, {"fd_step", oc.fd_step},
                      {"step_size", oc.step_size}, {"direction_samples", oc.direction_samples},
                      {"temperatures", oc.temperatures}};

    const OptimizerResult r = cfg.spinflip ? optimize_spinflip(oc) : optimize_universal(oc);
    const double target = cfg.spinflip ? 2.0 / 3.0 : 1.0 / 3.0;
    const std::string name = cfg.spinflip ? "best_flip_fidelity" : "best_eta";
    // The attainable value is only pinned for the four-dimensional ancilla.
    if (cfg.ancilla_dim == 4) rep.expect_at_least(name + "_lower", r.best_value, target - 1e-3);
    rep.expect_at_most(name + "_upper", r.best_value, target + 1e-6);
    rep.expect_at_most("max_evaluated_objective", r.max_evaluated_objective, 2.0 / 3.0 + 1e-6);
    rep.expect_at_most("max_isometry_defect", r.max_isometry_defect, 1e-12);
    rep.info = {{"best_value", r.best_value},
                {"per_restart_values", r.per_restart_values},
                {"evaluations", r.evaluations},
                {"accepted_steps", r.objective_trace.size()},
                {"best_params", r.best_params}};
    return rep;
}

Report run_prob(const RunConfig &cfg) {
    Report rep;
    const double theta = cfg.theta.value();
    rep.parameters = {{"theta", theta}, {"shots", cfg.shots}, {"seed", cfg.seed}};
    const ProbCloner pc = build_two_state_anticloner(theta);
    const double c = std::max(0.0, pc.m2.alpha.real());
    const double closed = (1.0 - c) / (1.0 - c * c);

    rep.expect_at_most("unitarity_defect", isometry_defect(pc.U), 1e-12);
    rep.expect_at_most("efficiency_closed_form_deviation", std::abs(pc.f - closed), 1e-12);
    json per_input = json::object();
    for (int which : {1, 2}) {
        const std::string tag = "input" + std::to_string(which) + "_";
        const ShotStats st = run_prob_anticlone(pc, which, cfg.shots, derive_seed(cfg.seed, which));
        rep.expect_at_most(tag + "exact_success_deviation", std::abs(st.success_probability - closed), 1e-12);
        if (cfg.shots > 0) {
            const double sigma = std::sqrt(pc.f * (1.0 - pc.f) / static_cast<double>(cfg.shots));
            const double gap = std::abs(st.success_frequency - pc.f);
            const double z = sigma > 0.0 ? gap / sigma : (gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
            rep.expect_at_most(tag + "frequency_sigmas", z, 3.0);
        }
        rep.expect_at_most(tag + "post_selected_fidelity_deviation", std::abs(st.post_selected_fidelity - 1.0),
                           1e-12);
        per_input[tag + "successes"] = st.successes;
        per_input[tag + "success_frequency"] = st.success_frequency;
    }
    per_input["f"] = pc.f;
    rep.info = std::move(per_input);
    return rep;
}

Report run_feasibility(const RunConfig &cfg) {
    Report rep;
    const StateSet set = load_states(cfg.states_path);
    json states = json::array();
    for (const auto &s : set.states) states.push_back(json::array({complex_json(s.alpha), complex_json(s.beta)}));
    rep.parameters = {{"states_file", cfg.states_path}, {"states", states}, {"L", cfg.L}, {"M", cfg.M}};

    const CopySpec mu{cfg.L, cfg.M};
    const FeasibilityResult fr = max_feasible_f(set, mu);
    const double gram_min = hermitian_eigenvalues(fr.gram_G).front();
    const bool dependent = set.states.size() > 2 || gram_min < tol::kStructural;

    rep.expect_at_least("certificate_min_eigenvalue", fr.min_eigenvalue_at_f, -1e-9);
    if (fr.f_max < 1.0) rep.expect_at_most("binding_min_eigenvalue_above", fr.min_eigenvalue_above, 0.0);
    if (dependent) {
        rep.expect_at_most("f_max_dependent", fr.f_max, 1e-9);
    } else if (set.states.size() == 2) {
        const double c = std::abs(inner(set.states[0].ket(), set.states[1].ket()));
        rep.expect_at_most("closed_form_deviation", std::abs(fr.f_max - two_state_efficiency(c, mu)), 1e-9);
    }
    rep.info = {{"f_max", fr.f_max},
                {"dependent", dependent},
                {"gram_min_eigenvalue", gram_min},
                {"gram_G", matrix_json(fr.gram_G)},
                {"gram_H", matrix_json(fr.gram_H)}};
    return rep;
}

Report run_baseline(const RunConfig &cfg) {
    Report rep;
    const std::uint64_t samples = cfg.samples.value_or(1000000);
    rep.parameters = {{"samples", samples}, {"seed", cfg.seed}};
    const BaselineReport b = measure_prepare_baseline(samples, cfg.seed);
    rep.expect_at_most("anticlone_fidelity_deviation", std::abs(b.avg_fidelity_anticlone - 2.0 / 3.0),
                       3.0 * b.stderr_anticlone);
    rep.expect_at_most("clone_fidelity_deviation", std::abs(b.avg_fidelity_clone - 2.0 / 3.0),
                       3.0 * b.stderr_clone);
    rep.info = {{"avg_fidelity_anticlone", b.avg_fidelity_anticlone},
                {"avg_fidelity_clone", b.avg_fidelity_clone},
                {"stderr_anticlone", b.stderr_anticlone},
                {"stderr_clone", b.stderr_clone}};
    return rep;
}

const char *subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::verify: return "verify";
        case Subcommand::optimize: return "optimize";
        case Subcommand::prob: return "prob";
        case Subcommand::feasibility: return "feasibility";
        case Subcommand::baseline: return "baseline";
    }
    return "?";
}

}  // namespace

RunResult run(const RunConfig &config) {
    const auto start = std::chrono::steady_clock::now();
    RunResult res;
    try {
        switch (config.subcommand) {
            case Subcommand::verify: res.report = run_verify(config); break;
            case Subcommand::optimize: res.report = run_optimize(config); break;
            case Subcommand::prob: res.report = run_prob(config); break;
            case Subcommand::feasibility: res.report = run_feasibility(config); break;
            case Subcommand::baseline: res.report = run_baseline(config); break;
        }
        res.exit_code = res.report.all_pass() ? kExitPass : kExitFail;
    } catch (const InputError &e) {
        res.report.error = e.what();
        res.exit_code = kExitUsage;
    } catch (const UsageError &e) {
        res.report.error = e.what();
        res.exit_code = kExitUsage;
    }
    res.report.subcommand = subcommand_name(config.subcommand);
    if (config.timing) {
        res.report.duration_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return res;
}

StateSet parse_states(const json &doc) {
    if (!doc.is_object() || !doc.contains("states") || !doc["states"].is_array()) {
        throw UsageError("state file: expected an object with a \"states\" array");
    }
    StateSet set;
    for (const auto &entry : doc["states"]) {
        if (!entry.is_array() || entry.size() != 2) throw UsageError("state file: each state needs two amplitudes");
        std::array<cplx, 2> amp{};
        for (std::size_t k = 0; k < 2; ++k) {
            const auto &pair = entry[k];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
                throw UsageError("state file: amplitudes must be [re, im] number pairs");
            }
            amp[k] = {pair[0].get<double>(), pair[1].get<double>()};
        }
        const double norm2 = std::norm(amp[0]) + std::norm(amp[1]);
        if (std::abs(norm2 - 1.0) > 1e-8) throw UsageError("state file: state is not normalized");
        if (std::abs(norm2 - 1.0) > 1e-12) {
            const double s = 1.0 / std::sqrt(norm2);
            amp[0] *= s;
            amp[1] *= s;
        }
        set.states.push_back({amp[0], amp[1]});
    }
    if (doc.contains("labels")) {
        for (const auto &l : doc["labels"]) set.labels.push_back(l.get<std::string>());
    }
    if (set.states.empty()) throw UsageError("state file: no states");
    if (!set.labels.empty() && set.labels.size() != set.states.size()) {
        throw UsageError("state file: label count does not match state count");
    }
    return set;
}

StateSet load_states(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open state file: " + path);
    try {
        return parse_states(json::parse(in));
    } catch (const json::exception &e) {
        throw UsageError("state file " + path + ": " + e.what());
    }
}

json to_json(const Report &r) {
    json checks = json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"relation", c.relation},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    }
    json out = {{"subcommand", r.subcommand},
                {"parameters", r.parameters},
                {"checks", checks},
                {"info", r.info},
                {"all_pass", r.all_pass()}};
    if (r.error) out["error"] = *r.error;
    if (r.duration_seconds) out["duration_seconds"] = *r.duration_seconds;
    return out;
}

std::string to_csv(const Report &r) {
    std::ostringstream os;
    os << "metric,value,tolerance,pass\n";
    char buf[64];
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    for (const auto &c : r.checks) {
        os << c.name << ',' << num(c.value) << ',' << num(c.tolerance) << ',' << (c.pass ? "true" : "false")
           << '\n';
    }
    return os.str();
}

void write_report(const Report &r, Format format, const std::string &path) {
    const std::string text = format == Format::json ? to_json(r).dump(2) + "\n" : to_csv(r);
    if (path.empty()) {
        std::cout << text << std::flush;
        if (!std::cout) throw UsageError("failed writing report to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
    out.close();
    if (!out) throw UsageError("failed writing output file: " + path);
}

int main_entry(const std::vector<std::string> &args) {
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const UsageError &e) {
        (e.exit_code == 0 ? std::cout : std::cerr) << e.what() << std::endl;
        return e.exit_code;
    }
    RunResult res = run(cfg);
    try {
        write_report(res.report, cfg.format, cfg.output_path);
    } catch (const UsageError &e) {
        std::cerr << e.what() << std::endl;
        return kExitUsage;
    }
    if (res.report.error) std::cerr << "error: " << *res.report.error << std::endl;
    return res.exit_code;
}

}  // namespace qac::cli
