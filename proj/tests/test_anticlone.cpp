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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qac/anticlone.hpp"
#include "qac/errors.hpp"
#include "qac/random.hpp"

namespace qac {
namespace {

TEST(OptimalParams, Moduli) {
    const AnticlonerParams p = paper_params();
    EXPECT_NEAR(std::norm(p[Coef::b]), 0.5, 1e-15);
    EXPECT_NEAR(std::norm(p[Coef::bt]), 0.5, 1e-15);
    for (Coef k : {Coef::a, Coef::c, Coef::d, Coef::at, Coef::ct, Coef::dt}) {
        EXPECT_NEAR(std::abs(p[k]), std::sqrt(1.0 / 6.0), 1e-15);
    }
}

TEST(OptimalParams, Phases) {
    const AnticlonerParams p = paper_params();
    EXPECT_NEAR(std::abs(std::arg(p[Coef::c])), std::numbers::pi, 1e-15);
    EXPECT_NEAR(std::abs(std::arg(p[Coef::ct])), std::numbers::pi, 1e-15);
    EXPECT_NEAR(std::arg(p[Coef::b]), std::acos(1.0 / std::sqrt(3.0)), 1e-15);
    EXPECT_NEAR(std::arg(p[Coef::bt]), std::acos(1.0 / std::sqrt(3.0)), 1e-15);
    for (Coef k : {Coef::a, Coef::d, Coef::at, Coef::dt}) EXPECT_EQ(std::arg(p[k]), 0.0);
}

TEST(OptimalParams, AllResidualsVanish) {
    const ConstraintReport r = constraint_residuals(paper_params());
    EXPECT_GE(r.residuals.size(), 20u);
    for (const auto &nr : r.residuals) EXPECT_LT(nr.value, 1e-12) << nr.name;
}

TEST(BuildIsometry, MatchesTermByTermColumns) {
    const CMatrix v = paper_isometry();
    const auto [c0, c1] = oracle::anticloner_columns();
    EXPECT_LT(max_abs_diff(v.column(0), c0), 1e-15);
    EXPECT_LT(max_abs_diff(v.column(1), c1), 1e-15);
    EXPECT_NEAR(v(0b0000, 0).real(), std::sqrt(1.0 / 6.0), 1e-15);
    EXPECT_LT(std::abs(v(0b0101, 0) - std::polar(std::sqrt(0.5), std::acos(1.0 / std::sqrt(3.0)))), 1e-15);
    EXPECT_LT(isometry_defect(v), 1e-12);
}

TEST(BuildIsometry, RejectsNonIsometry) {
    AnticlonerParams p = paper_params();
    p[Coef::b] = std::polar(std::sqrt(0.6), std::arg(p[Coef::b]));
    EXPECT_THROW(build_isometry(p), ValidityError);
}

TEST(Anticlone, NorthPole) {
    const CloneOutput out = anticlone(QubitState{1.0, 0.0}, paper_isometry());
    EXPECT_LT(max_abs_diff(out.rho1, CMatrix{{2.0 / 3.0, 0.0}, {0.0, 1.0 / 3.0}}), 1e-15);
    EXPECT_LT(max_abs_diff(out.rho2, CMatrix{{1.0 / 3.0, 0.0}, {0.0, 2.0 / 3.0}}), 1e-15);
}

TEST(Anticlone, EquatorOffDiagonals) {
    const double r = 1.0 / std::sqrt(2.0);
    const CloneOutput out = anticlone(QubitState{r, r}, paper_isometry());
    EXPECT_NEAR(out.rho1(0, 1).real(), 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(out.rho2(0, 1).real(), -1.0 / 6.0, 1e-15);
    EXPECT_NEAR(out.rho1(0, 1).imag(), 0.0, 1e-15);
    EXPECT_NEAR(out.rho2(0, 1).imag(), 0.0, 1e-15);
}

TEST(Anticlone, AgreesWithIndexSumOracle) {
    const auto [c0, c1] = oracle::anticloner_columns();
    CounterRng rng(21);
    const CMatrix v = paper_isometry();
    for (int trial = 0; trial < 100; ++trial) {
        const QubitState psi = bloch_to_state(haar_direction(rng));
        const CVector joint = psi.alpha * c0 + psi.beta * c1;
        const CloneOutput out = anticlone(psi, v);
        EXPECT_LT(max_abs_diff(out.joint, joint), 1e-15);
        EXPECT_LT(max_abs_diff(out.rho1, oracle::reduce_four_qubits(joint, 0)), 1e-14);
        EXPECT_LT(max_abs_diff(out.rho2, oracle::reduce_four_qubits(joint, 1)), 1e-14);
    }
}

TEST(Anticlone, UniversalOverHaarInputs) {
    CounterRng rng(22);
    const CMatrix v = paper_isometry();
    std::vector<double> fids;
    const int n = 1000;
    for (int trial = 0; trial < n; ++trial) {
        const BlochVector dir = haar_direction(rng);
        const CloneOutput out = anticlone(bloch_to_state(dir), v);
        const auto [t1, t2] = target_forms(dir, 1.0 / 3.0);
        EXPECT_LT(max_abs_diff(out.rho1, t1), 1e-9);
        EXPECT_LT(max_abs_diff(out.rho2, t2), 1e-9);
        EXPECT_NEAR(out.f1, 2.0 / 3.0, 1e-10);
        EXPECT_NEAR(out.f2, 2.0 / 3.0, 1e-10);
        EXPECT_NEAR(out.eta1, 1.0 / 3.0, 1e-10);
        EXPECT_NEAR(out.eta2, 1.0 / 3.0, 1e-10);
        const BlochVector b1 = state_to_bloch(out.rho1), b2 = state_to_bloch(out.rho2);
        EXPECT_LT(std::abs(b1.nx + b2.nx) + std::abs(b1.ny + b2.ny) + std::abs(b1.nz + b2.nz), 1e-10);
        fids.push_back(out.f1);
    }
    double mean = 0.0, var = 0.0;
    for (double f : fids) mean += f / n;
    for (double f : fids) var += (f - mean) * (f - mean) / n;
    EXPECT_LT(std::sqrt(var), 1e-10);
}

TEST(TargetForms, Examples) {
    const BlochVector z{0, 0, 1};
    auto [a, b] = target_forms(z, 0.0);
    EXPECT_LT(max_abs_diff(a, 0.5 * CMatrix::identity(2)), 1e-15);
    EXPECT_LT(max_abs_diff(b, 0.5 * CMatrix::identity(2)), 1e-15);
    std::tie(a, b) = target_forms(z, 1.0);
    EXPECT_LT(max_abs_diff(a, CMatrix::projector(CVector::basis(2, 0))), 1e-15);
    EXPECT_LT(max_abs_diff(b, CMatrix::projector(CVector::basis(2, 1))), 1e-15);
    std::tie(a, b) = target_forms(z, 1.0 / 3.0);
    EXPECT_LT(max_abs_diff(a, CMatrix{{2.0 / 3.0, 0.0}, {0.0, 1.0 / 3.0}}), 1e-15);
    EXPECT_LT(max_abs_diff(b, CMatrix{{1.0 / 3.0, 0.0}, {0.0, 2.0 / 3.0}}), 1e-15);
}

TEST(TargetForms, RejectsBadArguments) {
    EXPECT_THROW(target_forms({0.5, 0, 0}, 0.3), InputError);
    EXPECT_THROW(target_forms({1, 0, 0}, 1.5), InputError);
}

TEST(Constraints, EnlargedB) {
    AnticlonerParams p = paper_params();
    p[Coef::b] = std::polar(std::sqrt(0.6), std::arg(p[Coef::b]));
    const double hand = 1.0 / 6.0 + 0.6 + 1.0 / 6.0 + 1.0 / 6.0;
    EXPECT_NEAR(constraint_residuals(p).get("normalization_0"), std::abs(hand - 1.0), 1e-15);
    EXPECT_NEAR(constraint_residuals(p).get("normalization_0"), 0.1, 1e-15);
}

TEST(Constraints, AllZero) {
    AnticlonerParams p = paper_params();
    p.coeffs.fill(0.0);
    const ConstraintReport r = constraint_residuals(p);
    EXPECT_EQ(r.get("normalization_0"), 1.0);
    EXPECT_EQ(r.get("normalization_1"), 1.0);
    EXPECT_THROW(r.get("no_such_residual"), InputError);
}

TEST(Constraints, NonNegative) {
    CounterRng rng(23);
    AnticlonerParams p = paper_params();
    for (auto &c : p.coeffs) c = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    for (const auto &nr : constraint_residuals(p).residuals) EXPECT_GE(nr.value, 0.0) << nr.name;
}

TEST(Constraints, SingleCoefficientPerturbation) {
    for (std::size_t k = 0; k < 8; ++k) {
        for (double sign : {1.0, -1.0}) {
            AnticlonerParams p = paper_params();
            const cplx c = p.coeffs[k];
            p.coeffs[k] = c + std::polar(sign * 1e-3, std::arg(c));
            EXPECT_GT(constraint_residuals(p).max(), 1e-4) << "coefficient " << k << " sign " << sign;
        }
    }
}

TEST(Baseline, MillionSamples) {
    const BaselineReport r = measure_prepare_baseline(1000000, 0);
    EXPECT_EQ(r.samples, 1000000u);
    EXPECT_LT(std::abs(r.avg_fidelity_anticlone - 2.0 / 3.0), 3.0 * r.stderr_anticlone);
    EXPECT_LT(std::abs(r.avg_fidelity_clone - 2.0 / 3.0), 3.0 * r.stderr_clone);
    EXPECT_LT(std::abs(r.avg_fidelity_anticlone - 2.0 / 3.0), 0.002);
    EXPECT_GT(r.stderr_anticlone, 0.0);
}

TEST(Baseline, Deterministic) {
    const BaselineReport a = measure_prepare_baseline(100000, 42), b = measure_prepare_baseline(100000, 42);
    EXPECT_EQ(a.avg_fidelity_anticlone, b.avg_fidelity_anticlone);
    EXPECT_EQ(a.avg_fidelity_clone, b.avg_fidelity_clone);
    EXPECT_EQ(a.stderr_anticlone, b.stderr_anticlone);
    const BaselineReport c = measure_prepare_baseline(100000, 43);
    EXPECT_NE(a.avg_fidelity_anticlone, c.avg_fidelity_anticlone);
}

TEST(Baseline, AlignedBasisIsPerfect) {
    const BaselineReport r = measure_prepare_baseline(1000, 0, BaselineBasis::aligned);
    EXPECT_NEAR(r.avg_fidelity_anticlone, 1.0, 1e-12);
    EXPECT_NEAR(r.avg_fidelity_clone, 1.0, 1e-12);
}

TEST(Baseline, RejectsZeroSamples) { EXPECT_THROW(measure_prepare_baseline(0, 0), InputError); }

}  // namespace
}  // namespace qac
