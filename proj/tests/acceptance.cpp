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


// Acceptance campaign: one verdict line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qac/anticlone.hpp"
#include "qac/cli.hpp"
#include "qac/optimizer.hpp"
#include "qac/probclone.hpp"
#include "qac/random.hpp"

using namespace qac;

namespace {

constexpr double kPi = std::numbers::pi;
const double kGrid[] = {kPi / 6.0, kPi / 4.0, kPi / 3.0, kPi / 2.0};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
        }
    }
    void note(const std::string &s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Verdict universality() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const CMatrix iso = paper_isometry();
    CounterRng rng(derive_seed(0, 1));
    double dev = 0.0, fdev = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const BlochVector n = haar_direction(rng);
        const CloneOutput out = anticlone(bloch_to_state(n), iso);
        const auto [t1, t2] = target_forms(n, 1.0 / 3.0);
        dev = std::max({dev, max_abs_diff(out.rho1, t1), max_abs_diff(out.rho2, t2)});
        fdev = std::max({fdev, std::abs(out.f1 - 2.0 / 3.0), std::abs(out.f2 - 2.0 / 3.0)});
    }
    const double t = seconds_since(t0);
    v.require(dev < 1e-9, "density deviation");
    v.require(fdev < 1e-9, "fidelity deviation");
    v.require(t < 1.0, "runtime");
    v.note("max |rho - target| = " + fmt("%.3g", dev) + ", max |f - 2/3| = " + fmt("%.3g", fdev) +
           ", " + fmt("%.3f", t) + " s");
    return v;
}

Verdict constraints() {
    Verdict v;
    const double at_optimum = constraint_residuals(paper_params()).max();
    v.require(at_optimum < 1e-12, "residual at the stored solution");
    double weakest = 1e300;
    for (std::size_t k = 0; k < 8; ++k) {
        for (double sign : {1.0, -1.0}) {
            AnticlonerParams p = paper_params();
            p.coeffs[k] += std::polar(sign * 1e-3, std::arg(p.coeffs[k]));
            const double m = constraint_residuals(p).max();
            weakest = std::min(weakest, m);
            v.require(m > 1e-4, "perturbation of coefficient " + std::to_string(k));
        }
    }
    v.note("max residual = " + fmt("%.3g", at_optimum) + ", smallest perturbed max = " + fmt("%.3g", weakest));
    return v;
}

Verdict optimality() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    OptimizerConfig cfg;
    cfg.restarts = 20;
    const OptimizerResult r = optimize_universal(cfg);
    const double t = seconds_since(t0);
    v.require(r.best_value >= 1.0 / 3.0 - 1e-3 && r.best_value <= 1.0 / 3.0 + 1e-6, "best eta range");
    v.require(r.max_evaluated_objective <= 2.0 / 3.0 + 1e-6, "evaluated objective bound");
    v.require(r.max_isometry_defect < 1e-12, "isometry feasibility");
    v.require(t <= 300.0, "runtime");
    v.note("best eta = " + fmt("%.9f", r.best_value) + ", max objective seen = " +
           fmt("%.9f", r.max_evaluated_objective) + ", " + fmt("%.1f", t) + " s");
    return v;
}

Verdict spinflip_parity() {
    Verdict v;
    OptimizerConfig cfg;
    cfg.restarts = 20;
    const OptimizerResult r = optimize_spinflip(cfg);
    v.require(r.best_value >= 2.0 / 3.0 - 1e-3 && r.best_value <= 2.0 / 3.0 + 1e-6, "best F range");
    v.note("best F = " + fmt("%.9f", r.best_value));
    return v;
}

Verdict baseline() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const BaselineReport b = measure_prepare_baseline(1000000, 0);
    const double t = seconds_since(t0);
    v.require(std::abs(b.avg_fidelity_anticlone - 2.0 / 3.0) < 0.002, "average within 0.002");
    v.require(t < 10.0, "runtime");
    v.note("avg anti-clone fidelity = " + fmt("%.6f", b.avg_fidelity_anticlone) + " (stderr " +
           fmt("%.2g", b.stderr_anticlone) + "), " + fmt("%.2f", t) + " s");
    return v;
}

Verdict probabilistic() {
    Verdict v;
    double worst_sigmas = 0.0;
    for (double theta : kGrid) {
        const ProbCloner pc = build_two_state_anticloner(theta);
        const double c = std::cos(theta);
        const double closed = (1.0 - c) / (1.0 - c * c);
        const std::string tag = " at theta " + fmt("%.4f", theta);
        v.require(isometry_defect(pc.U) < 1e-12, "unitarity" + tag);
        for (int which : {1, 2}) {
            const ShotStats exact = run_prob_anticlone(pc, which, 0, 0);
            v.require(std::abs(exact.success_probability - closed) < 1e-12, "exact probability" + tag);
            const ShotStats st = run_prob_anticlone(pc, which, 100000, derive_seed(17, 2 * which));
            const double sigma = std::sqrt(closed * (1.0 - closed) / 1e5);
            const double gap = std::abs(st.success_frequency - closed);
            v.require(sigma > 0.0 ? gap <= 3.0 * sigma : gap == 0.0, "3 sigma frequency" + tag);
            if (sigma > 0.0) worst_sigmas = std::max(worst_sigmas, gap / sigma);
            v.require(std::abs(st.post_selected_fidelity - 1.0) < 1e-12, "post-selected fidelity" + tag);
        }
    }
    v.note("largest frequency offset = " + fmt("%.2f", worst_sigmas) + " sigma");
    return v;
}

Verdict feasibility_equivalence() {
    Verdict v;
    const CopySpec specs[] = {{1, 1}, {2, 1}, {5, 5}, {10, 10}};
    double worst = 0.0;
    for (double theta : kGrid) {
        const double c = std::abs(std::cos(theta)) < 1e-15 ? 0.0 : std::cos(theta);
        StateSet s;
        s.states = {{1.0, 0.0}, {std::cos(theta), std::sin(theta)}};
        for (const auto &mu : specs) {
            const double f = max_feasible_f(s, mu).f_max;
            const double gap = std::abs(f - two_state_efficiency(c, mu));
            worst = std::max(worst, gap);
            v.require(gap < 1e-9, "closed form at theta " + fmt("%.4f", theta));
        }
    }
    // Many-copy limit at overlap 1/2.
    StateSet half;
    half.states = {{1.0, 0.0}, {0.5, std::sqrt(0.75)}};
    const double f10 = max_feasible_f(half, {10, 10}).f_max;
    v.require(std::abs(f10 - 0.5) < 1e-5, "(10,10) limit at overlap 1/2");
    v.note("max closed-form gap = " + fmt("%.3g", worst) + ", |f(10,10) - (1 - c)| = " +
           fmt("%.3g", std::abs(f10 - 0.5)) + " at c = 1/2");
    return v;
}

Verdict no_signalling() {
    Verdict v;
    const double h = 1.0 / std::sqrt(2.0);
    StateSet s;
    s.states = {{1.0, 0.0}, {0.0, 1.0}, {h, h}};
    const FeasibilityResult r = max_feasible_f(s, {1, 1});
    v.require(r.f_max < 1e-9, "f_max for three states in two dimensions");
    v.note("f_max = " + fmt("%.3g", r.f_max));
    return v;
}

Verdict properties() {
    Verdict v;
    std::mt19937_64 rng(2026);
    std::normal_distribution<double> g;
    auto rvec = [&](std::size_t n) {
        CVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = {g(rng), g(rng)};
        return x;
    };

    double modulus = 0.0, linearity = 0.0, square = 0.0;
    for (int i = 0; i < 500; ++i) {
        const CVector a = rvec(2).normalized(), b = rvec(2).normalized();
        modulus = std::max(modulus, std::abs(std::abs(inner(a, b)) -
                                             std::abs(inner(antiunitary_flip(a), antiunitary_flip(b)))));
        const cplx x(g(rng), g(rng)), y(g(rng), g(rng));
        linearity = std::max(linearity, max_abs_diff(antiunitary_flip(x * a + y * b),
                                                     std::conj(x) * antiunitary_flip(a) +
                                                         std::conj(y) * antiunitary_flip(b)));
        square = std::max(square, max_abs_diff(antiunitary_flip(antiunitary_flip(a)), cplx(-1.0) * a));
    }
    v.require(modulus < 1e-12 && linearity < 1e-12 && square < 1e-15, "anti-unitarity");

    double trace_gap = 0.0;
    for (int i = 0; i < 50; ++i) {
        const CVector psi = rvec(8).normalized();
        const std::size_t dims[] = {2, 2, 2}, keep[] = {1};
        const CMatrix got = partial_trace(CMatrix::projector(psi), dims, keep);
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t jp = 0; jp < 2; ++jp) {
                cplx s = 0.0;
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t c = 0; c < 2; ++c) s += psi[4 * a + 2 * j + c] * std::conj(psi[4 * a + 2 * jp + c]);
                trace_gap = std::max(trace_gap, std::abs(got(j, jp) - s));
            }
        }
    }
    v.require(trace_gap < 1e-12, "partial trace index-sum oracle");

    double recon = 0.0;
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        for (int i = 0; i < 10; ++i) {
            CMatrix h(n, n);
            for (std::size_t r = 0; r < n; ++r) {
                h(r, r) = g(rng);
                for (std::size_t c = r + 1; c < n; ++c) {
                    h(r, c) = {g(rng), g(rng)};
                    h(c, r) = std::conj(h(r, c));
                }
            }
            const EigenSystem es = hermitian_eigensystem(h);
            recon = std::max(recon, max_abs_diff(es.vectors * CMatrix::diagonal(es.values) * es.vectors.adjoint(), h));
        }
    }
    v.require(recon < 1e-10, "eigen reconstruction");

    const std::vector<std::vector<std::string>> campaigns = {
        {"verify", "--samples", "300", "--seed", "5"},
        {"optimize", "--restarts", "2", "--iters", "40", "--seed", "5"},
        {"prob", "--theta", "0.9", "--shots", "20000", "--seed", "5"},
        {"baseline", "--samples", "100000", "--seed", "5"},
        {"--format", "csv", "verify", "--samples", "50"},
    };
    const auto dir = std::filesystem::temp_directory_path() / "qac_acceptance";
    std::filesystem::create_directories(dir);
    bool identical = true;
    for (std::size_t k = 0; k < campaigns.size(); ++k) {
        std::string bytes[2];
        for (int rep = 0; rep < 2; ++rep) {
            const auto path = dir / ("report_" + std::to_string(k) + "_" + std::to_string(rep));
            auto args = campaigns[k];
            args.insert(args.end(), {"--output", path.string()});
            if (cli::main_entry(args) == cli::kExitUsage) identical = false;
            std::ifstream in(path, std::ios::binary);
            std::ostringstream os;
            os << in.rdbuf();
            bytes[rep] = os.str();
        }
        identical = identical && !bytes[0].empty() && bytes[0] == bytes[1];
    }
    v.require(identical, "byte-identical CLI reports");
    v.note("anti-unitarity " + fmt("%.2g", std::max({modulus, linearity, square})) + ", partial trace " +
           fmt("%.2g", trace_gap) + ", eigen " + fmt("%.2g", recon));
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"universal anti-cloner exactness", universality},
        {"constraint system", constraints},
        {"optimality re-derivation", optimality},
        {"spin-flip parity", spinflip_parity},
        {"measurement baseline", baseline},
        {"probabilistic anti-cloner", probabilistic},
        {"feasibility oracle equivalence", feasibility_equivalence},
        {"no-signalling bound", no_signalling},
        {"property suites", properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failures += v.pass ? 0 : 1;
        std::printf("[%s] criterion %zu (%s): %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
