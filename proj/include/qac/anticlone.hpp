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

// Universal 1 -> 2 anti-cloning of a qubit.
//
// The machine acts as
//   |0>|Q> -> a|00>|A> + b|01>|B> + c|10>|C> + d|11>|D>
//   |1>|Q> -> a~|11>|A~> + b~|10>|B~> + c~|01>|C~> + d~|00>|D~>
// with four-dimensional (two-qubit) ancilla kets. The output register is
// ordered (clone 1, clone 2, ancilla qubit 1, ancilla qubit 2), qubit 1 most
// significant.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qac/linalg.hpp"
#include "qac/qubit.hpp"

namespace qac {

enum class Coef : std::size_t { a, b, c, d, at, bt, ct, dt };

struct AnticlonerParams {
    /// a, b, c, d, a~, b~, c~, d~ (index with Coef).
    std::array<cplx, 8> coeffs{};
    /// A, B, C, D, A~, B~, C~, D~, each normalized in C^4.
    std::array<CVector, 8> ancillas{};

    cplx &operator[](Coef k) { return coeffs[static_cast<std::size_t>(k)]; }
    const cplx &operator[](Coef k) const { return coeffs[static_cast<std::size_t>(k)]; }
    const CVector &ancilla(Coef k) const { return ancillas[static_cast<std::size_t>(k)]; }
};

struct CloneOutput {
    CVector joint;
    CMatrix rho1;
    CMatrix rho2;
    double f1 = 0.0;  // <n|rho1|n>
    double f2 = 0.0;  // <-n|rho2|-n>
    double eta1 = 0.0;
    double eta2 = 0.0;
};

struct NamedResidual {
    std::string name;
    double value = 0.0;
};

/// |LHS - RHS| for every condition the optimal machine must satisfy.
struct ConstraintReport {
    std::vector<NamedResidual> residuals;

    double max() const;
    /// Throws InputError for an unknown name.
    double get(std::string_view name) const;
};

struct BaselineReport {
    double avg_fidelity_clone = 0.0;
    double avg_fidelity_anticlone = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double stderr_clone = 0.0;
    double stderr_anticlone = 0.0;
};

enum class BaselineBasis {
    haar,     // measurement axis drawn independently of the input
    aligned,  // diagnostic: measure along the input direction itself
};

/// The eta = 1/3 solution: moduli sqrt(1/6) except |b| = |b~| = sqrt(1/2),
/// arg c = arg c~ = pi, arg b = arg b~ = arccos(1/sqrt 3), basis-ket ancillas.
AnticlonerParams paper_params();

/// 16x2 isometry whose columns are the images of |0> and |1>.
/// Throws ValidityError if V^dagger V deviates from I by more than `tolerance`.
CMatrix build_isometry(const AnticlonerParams &p, double tolerance = tol::kStructural);

/// build_isometry(paper_params()).
CMatrix paper_isometry();

/// Applies a (4 * ancilla_dim) x 2 isometry to psi and reduces onto each clone.
CloneOutput anticlone(const QubitState &psi, const CMatrix &v);

/// ((1 + eta n.sigma)/2, (1 - eta n.sigma)/2).
std::pair<CMatrix, CMatrix> target_forms(const BlochVector &n, double eta);

ConstraintReport constraint_residuals(const AnticlonerParams &p);

/// Measure-and-prepare anti-cloning averaged over Haar-random inputs.
/// Throws InputError when samples == 0.
BaselineReport measure_prepare_baseline(std::uint64_t samples, std::uint64_t seed,
                                        BaselineBasis basis = BaselineBasis::haar);

}  // namespace qac
