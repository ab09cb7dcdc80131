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

#include "qac/anticlone.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>

#include "qac/errors.hpp"
#include "qac/random.hpp"

namespace qac {

double ConstraintReport::max() const {
    double m = 0.0;
    for (const auto &r : residuals) m = std::max(m, r.value);
    return m;
}

double ConstraintReport::get(std::string_view name) const {
    for (const auto &r : residuals) {
        if (r.name == name) return r.value;
    }
    throw InputError("unknown constraint residual: " + std::string(name));
}

AnticlonerParams paper_params() {
    const double s6 = std::sqrt(1.0 / 6.0);
    const double s2 = std::sqrt(0.5);
    const cplx b = std::polar(s2, std::acos(1.0 / std::sqrt(3.0)));
    const cplx c = std::polar(s6, std::numbers::pi);

    AnticlonerParams p;
    p[Coef::a] = s6;
    p[Coef::b] = b;
    p[Coef::c] = c;
    p[Coef::d] = s6;
    p[Coef::at] = s6;
    p[Coef::bt] = b;
    p[Coef::ct] = c;
    p[Coef::dt] = s6;

    const auto e = [](std::size_t i) { return CVector::basis(4, i); };
    p.ancillas = {e(0), e(1), e(1), e(2),   // A, B, C, D
                  e(1), e(0), e(0), e(3)};  // A~, B~, C~, D~
    return p;
}

CMatrix build_isometry(const AnticlonerParams &p, double tolerance) {
    const auto two = [](std::size_t q1, std::size_t q2) { return CVector::basis(4, 2 * q1 + q2); };
    const auto term = [&](Coef k, std::size_t q1, std::size_t q2) {
        return p[k] * tensor(two(q1, q2), p.ancilla(k));
    };
    for (const auto &anc : p.ancillas) {
        if (anc.dim() != 4) throw InputError("build_isometry: ancilla kets must be 4-dimensional");
    }
    const CVector col0 = term(Coef::a, 0, 0) + term(Coef::b, 0, 1) + term(Coef::c, 1, 0) +
                         term(Coef::d, 1, 1);
    const CVector col1 = term(Coef::at, 1, 1) + term(Coef::bt, 1, 0) + term(Coef::ct, 0, 1) +
                         term(Coef::dt, 0, 0);
    const std::array cols{col0, col1};
    CMatrix v = CMatrix::from_columns(cols);
    const double defect = isometry_defect(v);
    if (defect > tolerance) {
        throw ValidityError("build_isometry: V^dagger V differs from I by " + std::to_string(defect));
    }
    return v;
}

CMatrix paper_isometry() { return build_isometry(paper_params()); }

CloneOutput anticlone(const QubitState &psi, const CMatrix &v) {
    if (v.cols() != 2 || v.rows() % 4 != 0 || v.rows() == 0) {
        throw InputError("anticlone: expected a (4k) x 2 isometry");
    }
    if (!psi.is_normalized(tol::kStructural)) throw InputError("anticlone: input state not normalized");
    const BlochVector n = state_to_bloch(psi);

    CloneOutput out;
    out.joint = v * psi.ket();
    const CMatrix rho = CMatrix::projector(out.joint);
    const std::array<std::size_t, 3> dims{2, 2, v.rows() / 4};
    const std::array<std::size_t, 1> keep1{0}, keep2{1};
    out.rho1 = partial_trace(rho, dims, keep1);
    out.rho2 = partial_trace(rho, dims, keep2);
    const auto s1 = shrink_factor(out.rho1, n);
    const auto s2 = shrink_factor(out.rho2, -n);
    out.f1 = s1.fidelity;
    out.f2 = s2.fidelity;
    out.eta1 = s1.eta;
    out.eta2 = s2.eta;
    return out;
}

std::pair<CMatrix, CMatrix> target_forms(const BlochVector &n, double eta) {
    if (std::abs(n.norm() - 1.0) > tol::kStructural) throw InputError("target_forms: n is not a unit vector");
    if (eta < 0.0 || eta > 1.0) throw InputError("target_forms: eta outside [0, 1]");
    return {bloch_density(n * eta), bloch_density(n * -eta)};
}

ConstraintReport constraint_residuals(const AnticlonerParams &p) {
    const cplx a = p[Coef::a], b = p[Coef::b], c = p[Coef::c], d = p[Coef::d];
    const cplx at = p[Coef::at], bt = p[Coef::bt], ct = p[Coef::ct], dt = p[Coef::dt];
    // <X|Y> between ancilla kets.
    const auto ip = [&](Coef x, Coef y) { return inner(p.ancilla(x), p.ancilla(y)); };
    const auto cj = [](cplx z) { return std::conj(z); };
    const auto sq = [](cplx z) { return std::norm(z); };

    ConstraintReport r;
    auto add = [&](std::string name, double value) { r.residuals.push_back({std::move(name), value}); };

    for (std::size_t k = 0; k < p.ancillas.size(); ++k) {
        add("ancilla_norm_" + std::to_string(k), std::abs(p.ancillas[k].norm() - 1.0));
    }

    add("normalization_0", std::abs(sq(a) + sq(b) + sq(c) + sq(d) - 1.0));
    add("normalization_1", std::abs(sq(at) + sq(bt) + sq(ct) + sq(dt) - 1.0));
    add("orthogonality", std::abs(cj(a) * dt * ip(Coef::a, Coef::dt) + cj(c) * bt * ip(Coef::c, Coef::bt) +
                                  cj(b) * ct * ip(Coef::b, Coef::ct) + cj(d) * at * ip(Coef::d, Coef::at)));

    add("modulus_a_d", std::abs(std::abs(a) - std::abs(d)));
    add("modulus_at_dt", std::abs(std::abs(at) - std::abs(dt)));
    add("nz_cross", std::abs(a * cj(dt) * ip(Coef::dt, Coef::a) + b * cj(ct) * ip(Coef::ct, Coef::b) -
                             c * cj(bt) * ip(Coef::bt, Coef::c) - d * cj(at) * ip(Coef::at, Coef::d)));

    // Every expression for eta must agree.
    const double eta_z = sq(b) - sq(c);
    const double eta_z_alt = 2.0 * sq(b) + 2.0 * sq(a) - 1.0;
    const cplx xy_plus = cj(a) * bt * ip(Coef::a, Coef::bt) + cj(b) * at * ip(Coef::b, Coef::at);
    const cplx xy_minus = ct * cj(a) * ip(Coef::a, Coef::ct) + at * cj(c) * ip(Coef::c, Coef::at);
    const double eta_xy_plus = xy_plus.real();
    // The anti-aligned clone's coherence enters with the opposite sign.
    const double eta_xy_minus = -xy_minus.real();
    const std::array etas{eta_z, eta_z_alt, eta_xy_plus, eta_xy_minus};
    const auto [lo, hi] = std::minmax_element(etas.begin(), etas.end());
    add("eta_consistency", *hi - *lo);

    add("zero_1", std::abs(xy_plus.imag()));
    add("zero_2", std::abs(xy_minus.imag()));
    add("zero_3", std::abs(b * cj(dt) * ip(Coef::dt, Coef::b) + d * cj(bt) * ip(Coef::bt, Coef::d)));
    add("zero_4", std::abs(c * cj(a) * ip(Coef::a, Coef::c) + d * cj(b) * ip(Coef::b, Coef::d)));
    add("zero_5", std::abs(at * cj(ct) * ip(Coef::ct, Coef::at) + bt * cj(dt) * ip(Coef::dt, Coef::bt)));
    add("zero_6", std::abs(c * cj(dt) * ip(Coef::dt, Coef::c) + d * cj(ct) * ip(Coef::ct, Coef::d)));
    add("zero_7", std::abs(cj(a) * b * ip(Coef::a, Coef::b) + cj(c) * d * ip(Coef::c, Coef::d)));
    add("zero_8", std::abs(cj(bt) * at * ip(Coef::bt, Coef::at) + cj(dt) * ct * ip(Coef::dt, Coef::ct)));

    add("symmetry_a", std::abs(std::abs(a) - std::abs(at)));
    add("symmetry_b", std::abs(std::abs(b) - std::abs(bt)));
    add("symmetry_c", std::abs(std::abs(c) - std::abs(ct)));
    return r;
}

namespace {

struct BaselineBatch {
    double sum_clone = 0.0, sumsq_clone = 0.0;
    double sum_anti = 0.0, sumsq_anti = 0.0;
};

BaselineBatch run_baseline_batch(std::uint64_t count, std::uint64_t seed, BaselineBasis basis) {
    CounterRng rng(seed);
    BaselineBatch acc;
    for (std::uint64_t i = 0; i < count; ++i) {
        const BlochVector n = haar_direction(rng);
        const BlochVector m = basis == BaselineBasis::aligned ? n : haar_direction(rng);
        // Outcome +m with probability p prepares (|m>, |-m>); outcome -m prepares
        // (|-m>, |m>). Averaged over outcomes each clone is a Bloch-shrunk |+-m>.
        const double p = 0.5 * (1.0 + n.dot(m));
        const BlochVector shrunk = m * (2.0 * p - 1.0);
        const double fc = fidelity_direction(bloch_density(shrunk), n);
        const double fa = fidelity_direction(bloch_density(-shrunk), -n);
        acc.sum_clone += fc;
        acc.sumsq_clone += fc * fc;
        acc.sum_anti += fa;
        acc.sumsq_anti += fa * fa;
    }
    return acc;
}

}  // namespace

BaselineReport measure_prepare_baseline(std::uint64_t samples, std::uint64_t seed, BaselineBasis basis) {
    if (samples == 0) throw InputError("measure_prepare_baseline: samples must be >= 1");
    constexpr std::uint64_t kBatch = 1 << 16;
    const std::uint64_t batches = (samples + kBatch - 1) / kBatch;
    const std::uint64_t workers = std::max(1u, std::thread::hardware_concurrency());

    std::vector<BaselineBatch> results(batches);
    for (std::uint64_t first = 0; first < batches; first += workers) {
        std::vector<std::future<BaselineBatch>> jobs;
        const std::uint64_t last = std::min(batches, first + workers);
        for (std::uint64_t b = first; b < last; ++b) {
            const std::uint64_t count = std::min(kBatch, samples - b * kBatch);
            jobs.push_back(std::async(std::launch::async, run_baseline_batch, count,
                                      derive_seed(seed, b), basis));
        }
        for (std::uint64_t b = first; b < last; ++b) results[b] = jobs[b - first].get();
    }

    BaselineBatch total;
    for (const auto &r : results) {  // batch order keeps the sums bit-reproducible
        total.sum_clone += r.sum_clone;
        total.sumsq_clone += r.sumsq_clone;
        total.sum_anti += r.sum_anti;
        total.sumsq_anti += r.sumsq_anti;
    }
    const double n = static_cast<double>(samples);
    const auto stderr_of = [n](double sum, double sumsq) {
        if (n < 2.0) return 0.0;
        const double mean = sum / n;
        const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
        return std::sqrt(var / n);
    };
    BaselineReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.avg_fidelity_clone = total.sum_clone / n;
    rep.avg_fidelity_anticlone = total.sum_anti / n;
    rep.stderr_clone = stderr_of(total.sum_clone, total.sumsq_clone);
    rep.stderr_anticlone = stderr_of(total.sum_anti, total.sumsq_anti);
    return rep;
}

}  // namespace qac
