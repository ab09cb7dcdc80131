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

#include "qac/probclone.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qac/errors.hpp"
#include "qac/random.hpp"

namespace qac {

namespace {

constexpr double kPsdThreshold = -1e-12;

double min_eigenvalue(const CMatrix &h) { return hermitian_eigenvalues(h).front(); }

cplx ipow(cplx z, std::size_t k) {
    cplx r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r *= z;
    return r;
}

}  // namespace

void StateSet::validate(double tolerance) const {
    if (states.empty()) throw InputError("state set is empty");
    if (!labels.empty() && labels.size() != states.size()) {
        throw InputError("state set has " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(states.size()) + " states");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!states[i].is_normalized(tolerance)) {
            throw InputError("state " + std::to_string(i) + " is not normalized");
        }
    }
}

std::pair<CMatrix, CMatrix> output_grams(const StateSet &set, const CopySpec &mu) {
    set.validate();
    if (mu.L + mu.M == 0) throw InputError("copy spec needs L + M >= 1");
    // Rephase so every overlap with the first state is real and non-negative.
    std::vector<CVector> kets;
    const CVector first = set.states[0].ket();
    for (const auto &s : set.states) {
        CVector k = s.ket();
        const cplx ov = inner(first, k);
        if (std::abs(ov) > 0.0) k *= std::conj(ov) / std::abs(ov);
        kets.push_back(std::move(k));
    }
    std::vector<CVector> flipped;
    for (const auto &k : kets) flipped.push_back(antiunitary_flip(k));

    const std::size_t n = kets.size();
    CMatrix g(n, n), h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = inner(kets[i], kets[j]);
            h(i, j) = ipow(g(i, j), mu.L) * ipow(inner(flipped[i], flipped[j]), mu.M);
        }
    }
    return {g, h};
}

FeasibilityResult max_feasible_f(const StateSet &set, const CopySpec &mu, double width) {
    auto [g, h] = output_grams(set, mu);
    auto residual_min = [&](double f) { return min_eigenvalue(g - cplx(f) * h); };

    double lo = 0.0, hi = 1.0;
    if (residual_min(1.0) >= kPsdThreshold) {
        lo = 1.0;
    } else {
        while (hi - lo > width) {
            const double mid = 0.5 * (lo + hi);
            (residual_min(mid) >= kPsdThreshold ? lo : hi) = mid;
        }
    }
    FeasibilityResult r;
    r.f_max = lo;
    r.min_eigenvalue_at_f = residual_min(lo);
    r.min_eigenvalue_above = residual_min(lo + 1e-6);
    r.gram_G = std::move(g);
    r.gram_H = std::move(h);
    return r;
}

double two_state_efficiency(double overlap, const CopySpec &mu) {
    if (overlap < 0.0 || overlap >= 1.0) throw InputError("two_state_efficiency: overlap must be in [0, 1)");
    return (1.0 - overlap) / (1.0 - std::pow(overlap, static_cast<double>(mu.L + mu.M)));
}

ProbCloner build_two_state_anticloner(double theta) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    if (!(theta > 0.0) || theta > kHalfPi + 1e-12) {
        throw InputError("build_two_state_anticloner: theta must lie in (0, pi/2]");
    }
    const bool orthogonal = std::abs(theta - kHalfPi) <= 1e-12;
    const double c = orthogonal ? 0.0 : std::cos(theta);
    const double s = orthogonal ? 1.0 : std::sin(theta);
    const double tan_half = orthogonal ? 1.0 : std::tan(0.5 * theta);  // (1 - c) / s
    const double norm = 1.0 / std::sqrt(1.0 + c);
    const double root_c = std::sqrt(c);

    const auto ket = [](std::size_t index) { return CVector::basis(8, index); };
    // Images of |000> and |100>; bit order (input, blank, probe).
    const CVector n1 = norm * ket(0b010) + (root_c * norm) * ket(0b001);
    const CVector n2 = (-c * norm) * ket(0b000) + (-c * tan_half * norm) * ket(0b010) +
                       (-s * norm) * ket(0b100) + (c * norm) * ket(0b110) +
                       (root_c * tan_half * norm) * ket(0b001);

    const std::array<CVector, 2> fixed{n1, n2};
    const auto basis = orthonormal_complete(fixed, 8);
    CMatrix u(8, 8);
    u.set_column(0b000, basis[0]);
    u.set_column(0b100, basis[1]);
    std::size_t next = 2;
    for (std::size_t col = 0; col < 8; ++col) {
        if (col == 0b000 || col == 0b100) continue;
        u.set_column(col, basis[next++]);
    }

    ProbCloner pc;
    pc.U = std::move(u);
    pc.theta = theta;
    pc.f = 1.0 / (1.0 + c);
    pc.m1 = {1.0, 0.0};
    pc.m2 = {c, s};
    pc.probe_success_ket = CVector::basis(2, 0);
    pc.probe_fail_ket = CVector::basis(2, 1);
    pc.garbage = CVector::basis(4, 0);
    return pc;
}

ShotStats run_prob_anticlone(const ProbCloner &pc, int which, std::uint64_t shots, std::uint64_t seed) {
    if (which != 1 && which != 2) throw InputError("run_prob_anticlone: input index must be 1 or 2");
    const QubitState m = which == 1 ? pc.m1 : pc.m2;
    const CVector in = tensor(tensor(m.ket(), CVector::basis(2, 0)), pc.probe_success_ket);
    const CVector out = pc.U * in;

    // Success branch: contract the probe register with <Y0|.
    CVector branch(4);
    for (std::size_t i = 0; i < 4; ++i) {
        branch[i] = std::conj(pc.probe_success_ket[0]) * out[2 * i] +
                    std::conj(pc.probe_success_ket[1]) * out[2 * i + 1];
    }
    const double p = branch.norm() * branch.norm();
    const CVector target = tensor(m.ket(), antiunitary_flip(m.ket()));

    ShotStats st;
    st.shots = shots;
    st.seed = seed;
    st.success_probability = std::min(1.0, p);
    st.post_selected_fidelity = p > 0.0 ? std::norm(inner(target, branch)) / p : 0.0;
    if (shots == 0) {
        st.success_frequency = st.success_probability;
        return st;
    }
    CounterRng rng(seed);
    for (std::uint64_t k = 0; k < shots; ++k) {
        if (rng.uniform() < st.success_probability) ++st.successes;
    }
    st.success_frequency = static_cast<double>(st.successes) / static_cast<double>(shots);
    return st;
}

ProbSpinFlip build_prob_spinflip(const QubitState &m1, const QubitState &m2) {
    if (!m1.is_normalized(tol::kStructural) || !m2.is_normalized(tol::kStructural)) {
        throw InputError("build_prob_spinflip: inputs must be normalized");
    }
    const CVector k1 = m1.ket();
    CVector k2 = m2.ket();
    const cplx ov = inner(k1, k2);
    const double overlap = std::abs(ov);
    if (1.0 - overlap < tol::kStructural) {
        throw RankError("build_prob_spinflip: inputs are linearly dependent");
    }
    if (overlap > 0.0) k2 *= std::conj(ov) / overlap;

    ProbSpinFlip sf;
    sf.F = 1.0 - overlap;
    const CVector zero = CVector::basis(2, 0), one = CVector::basis(2, 1);
    const CVector garbage = CVector::basis(4, 0);
    const std::array<CVector, 2> kets{k1, k2};
    const std::array<CVector, 2> flags{zero, one};  // |B1>, |B2>
    for (std::size_t i = 0; i < 2; ++i) {
        sf.inputs.push_back(tensor(tensor(kets[i], zero), zero));
        sf.images.push_back(std::sqrt(sf.F) * tensor(tensor(antiunitary_flip(kets[i]), flags[i]), zero) +
                            std::sqrt(1.0 - sf.F) * tensor(garbage, one));
    }
    sf.U = unitary_from_correspondence(sf.inputs, sf.images);
    return sf;
}

}  // namespace qac
